//! Shared by the golden-file test and the acceptance runner.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use polycap_core::abelian::arith::gcd;
use polycap_core::{AbelianGroup, SpaceDescriptor};
use rand::seq::SliceRandom;
use rand::Rng;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: [Case; 12] = [
    Case { name: "capacity_lens", args: &["capacity", "L(7,2)"], code: 0 },
    Case { name: "homology_rp4", args: &["homology", "RP4", "--max-dim", "4"], code: 0 },
    Case { name: "dominated_surface", args: &["dominated", "Sg(2)"], code: 3 },
    Case { name: "capacity_product", args: &["capacity", "S2 x S3"], code: 0 },
    Case { name: "capacity_moore", args: &["capacity", "M(Z/4 + Z/2, 3)"], code: 0 },
    Case { name: "capacity_zn", args: &["capacity", "ZC(12; 1)"], code: 0 },
    Case { name: "dominated_zn", args: &["dominated", "ZC(12;1)"], code: 0 },
    Case { name: "dominated_wedge", args: &["dominated", "S1 v S1"], code: 0 },
    Case { name: "homology_lens", args: &["homology", "L(5,2)", "--max-dim", "3"], code: 0 },
    Case { name: "homology_em", args: &["homology", "K(Z/6, 1)", "--max-dim", "5"], code: 0 },
    Case { name: "capacity_wedge", args: &["capacity", "S2*2 v S5"], code: 0 },
    Case { name: "group_mixed", args: &["group", "Z^2 + Z/4 + Z/2"], code: 0 },
];

pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn invoke(args: &[&str], json: bool) -> Invocation {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_polycap"));
    if json {
        cmd.arg("--json");
    }
    let out = cmd.args(args).output().expect("binary runs");
    Invocation {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn compare(path: PathBuf, actual: &str, bless: bool) -> Result<(), String> {
    if bless {
        std::fs::write(&path, actual).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(());
    }
    let expected =
        std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{} differs:\n--- expected\n{expected}--- actual\n{actual}", path.display()))
    }
}

/// Runs `case` in text and JSON mode and compares stdout (and stderr, for
/// failing cases) byte for byte. With `bless`, rewrites the files instead.
pub fn check_case(case: &Case, bless: bool) -> Result<(), String> {
    for (json, ext) in [(false, "txt"), (true, "json")] {
        let out = invoke(case.args, json);
        if out.code != case.code {
            return Err(format!("{} ({ext}): exit {} (expected {})", case.name, out.code, case.code));
        }
        compare(golden_dir().join(format!("{}.{ext}", case.name)), &out.stdout, bless)?;
        if case.code != 0 {
            compare(golden_dir().join(format!("{}.{ext}.stderr", case.name)), &out.stderr, bless)?;
        } else if !out.stderr.is_empty() {
            return Err(format!("{} ({ext}): unexpected stderr {:?}", case.name, out.stderr));
        }
    }
    Ok(())
}

pub fn random_group<R: Rng>(rng: &mut R) -> AbelianGroup {
    loop {
        let free = rng.gen_range(0..=2);
        let orders: Vec<u64> = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(2..=16)).collect();
        let g = AbelianGroup::from_cyclic_orders(free, &orders);
        if !g.is_trivial() {
            return g;
        }
    }
}

/// A valid descriptor from any family, not necessarily normalized.
pub fn random_descriptor<R: Rng>(rng: &mut R) -> SpaceDescriptor {
    use SpaceDescriptor::*;
    match rng.gen_range(0..13) {
        0 => Point,
        1 => Sphere(rng.gen_range(1..=9)),
        2 => {
            let mut map = BTreeMap::new();
            for _ in 0..rng.gen_range(0..=3) {
                map.insert(rng.gen_range(1..=6), rng.gen_range(1..=3));
            }
            WedgeOfSpheres(map)
        }
        3 => MooreSpace { group: random_group(rng), degree: rng.gen_range(2..=6) },
        4 => EilenbergMacLane { group: random_group(rng), degree: rng.gen_range(1..=4) },
        5 => ProductOfSpheres(rng.gen_range(1..=7), rng.gen_range(1..=7)),
        6 => {
            let p = rng.gen_range(1..=30u64);
            let qs: Vec<u64> = (0..=2 * p).filter(|&q| gcd(p, q) == 1).collect();
            LensSpace { p, q: *qs.choose(rng).expect("q = 1 is coprime") }
        }
        7 => RealProjective(rng.gen_range(1..=9)),
        8 => Surface { orientable: true, genus: rng.gen_range(0..=6) },
        9 => Surface { orientable: false, genus: rng.gen_range(1..=6) },
        10 => ZnComplex { n: rng.gen_range(1..=400), h2_rank: rng.gen_range(0..=3) },
        11 => PseudoProjectivePlane(rng.gen_range(2..=400)),
        _ => FreePi1Complex { pi1_rank: rng.gen_range(0..=3), h2_rank: rng.gen_range(0..=3) },
    }
}
