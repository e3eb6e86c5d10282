use std::path::Path;
use std::str::FromStr;

use hopf_planar::duality::{verify_duality_on_network, verify_generator_map};
use hopf_planar::hopf::{
    fourier_matrix, verify_fourier_laws, verify_integral_laws, verify_relation_identities, AXIOMS,
};
use hopf_planar::io::{self, IoError};
use hopf_planar::network::{apply_move, check_move_invariance, enumerate_sites};
use hopf_planar::pairing::{depth_two_gram, gram_report, reconstruct_structure, PairingError};
use hopf_planar::tilings::{
    brute_force_tilings, enumerate_tilings, flip_graph, surjectivity_gram, tiling_to_tangle, TilingError, MAX_TANGLE_K,
};
use hopf_planar::{Hopf, HopfAlgebra, HopfError, Move, Network, NetworkSum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{CliError, Command, Session};

type Outcome = Result<(Value, bool), CliError>;

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn from_io(e: IoError) -> CliError {
    input(e)
}

fn from_pairing(e: PairingError) -> CliError {
    match e {
        PairingError::Budget { .. } => CliError::Budget(e.to_string()),
        other => input(other),
    }
}

fn load_hopf(path: &Path, s: &Session) -> Result<Hopf, CliError> {
    io::load_hopf(path, s.delta_sign).map_err(from_io)
}

fn load_network(path: &Path, h: &Hopf, s: &Session) -> Result<Network, CliError> {
    let n = io::load_network(path, h).map_err(from_io)?;
    if n.num_boxes() > s.budget.max_boxes {
        return Err(CliError::Budget(format!(
            "budget exceeded: {} boxes requested, cap {}",
            n.num_boxes(),
            s.budget.max_boxes
        )));
    }
    Ok(n)
}

fn checks<'a>(items: impl IntoIterator<Item = (&'a str, bool)>) -> (Value, bool) {
    let mut all = true;
    let list = items
        .into_iter()
        .map(|(name, passed)| {
            all &= passed;
            json!({"name": name, "passed": passed})
        })
        .collect();
    (Value::Array(list), all)
}

pub fn run(cmd: &Command, s: &Session) -> Outcome {
    match cmd {
        Command::VerifyHopf { path, hopf } => {
            let path = path.as_ref().or(hopf.as_ref()).ok_or_else(|| input("verify-hopf needs a spec path"))?;
            verify_hopf(path, s)
        }
        Command::Eval { hopf, network, naive } => {
            let h = load_hopf(hopf, s)?;
            let n = load_network(network, &h, s)?;
            let value = if *naive { hopf_planar::network::evaluate_naive(&n, &h) } else { n.evaluate(&h) };
            let value = value.map_err(input)?;
            let method = if *naive { "naive" } else { "contraction" };
            Ok((
                json!({"value": value.to_string(), "boxes": n.num_boxes(), "planar": n.is_planar(), "method": method}),
                true,
            ))
        }
        Command::Moves { hopf, check, network, relation, count, boxes } => {
            let h = load_hopf(hopf, s)?;
            let relations = match relation {
                Some(r) => vec![Move::from_str(r).map_err(input)?],
                None => Move::ALL.to_vec(),
            };
            match network {
                Some(path) => moves_on_network(&h, &load_network(path, &h, s)?, &relations, *check),
                None if *check => {
                    if *boxes > s.budget.max_boxes {
                        return Err(CliError::Budget(format!(
                            "budget exceeded: {boxes} boxes requested, cap {}",
                            s.budget.max_boxes
                        )));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
                    let results: Vec<_> =
                        relations.iter().map(|&mv| check_move_invariance(&h, mv, *count, *boxes, &mut rng)).collect();
                    let passed = results.iter().all(|r| r.passed());
                    Ok((json!({"seed": s.seed, "count": count, "relations": results, "passed": passed}), passed))
                }
                None => Err(input("moves needs --check or --network")),
            }
        }
        Command::Gram { hopf, k } => {
            let h = load_hopf(hopf, s)?;
            if *k < 1 {
                return Err(input("--k must be at least 1"));
            }
            let report = gram_report(&h, *k, &s.budget).map_err(from_pairing)?;
            let passed = report.passed;
            Ok((serde_json::to_value(report).expect("serializable"), passed))
        }
        Command::DepthTwo { hopf } => {
            let h = load_hopf(hopf, s)?;
            let n = h.dim();
            s.budget.check_entries(n.pow(4)).map_err(from_pairing)?;
            let rank = depth_two_gram(&h).map_err(from_pairing)?.rank();
            let passed = rank == n * n;
            Ok((json!({"dim": n, "rank": rank, "expected": n * n, "passed": passed}), passed))
        }
        Command::Reconstruct { hopf } => {
            let h = load_hopf(hopf, s)?;
            s.budget.check_entries(h.dim().pow(4)).map_err(from_pairing)?;
            let report = reconstruct_structure(&h).map_err(from_pairing)?;
            let passed = report.passed();
            let mut v = serde_json::to_value(report).expect("serializable");
            v["passed"] = json!(passed);
            Ok((v, passed))
        }
        Command::Fourier { hopf, verify } => {
            let h = load_hopf(hopf, s)?;
            if !*verify {
                let f = fourier_matrix(&h);
                let rows: Vec<Vec<String>> =
                    (0..f.rows()).map(|r| f.row(r).iter().map(ToString::to_string).collect()).collect();
                return Ok((json!({"fourier": rows}), true));
            }
            let laws = verify_fourier_laws(&h);
            let generator = verify_generator_map(&h);
            let passed = laws.all_passed() && generator.all_passed();
            Ok((json!({"laws": laws.laws, "generator": generator.checks, "passed": passed}), passed))
        }
        Command::Duality { hopf, network } => {
            let h = load_hopf(hopf, s)?;
            let n = load_network(network, &h, s)?;
            let out = verify_duality_on_network(&h, &n).map_err(input)?;
            let equal = out.equal();
            Ok((json!({"lhs": out.lhs.to_string(), "rhs": out.rhs.to_string(), "equal": equal}), equal))
        }
        Command::Tilings { k, flip_graph: want_graph, dot, hopf } => {
            tilings(*k, *want_graph, dot.as_deref(), hopf.as_deref(), s)
        }
    }
}

fn verify_hopf(path: &Path, s: &Session) -> Outcome {
    let constants = match io::load_hopf_constants(path) {
        Ok(c) => c,
        Err(IoError::Hopf(e @ HopfError::NotAGroup { .. })) => return Ok(axiom_failure(path, &e)),
        Err(e) => return Err(from_io(e)),
    };
    let h: Hopf = match HopfAlgebra::from_constants(constants, s.delta_sign) {
        Ok(h) => h,
        Err(e @ (HopfError::Shape(_) | HopfError::Scalar(_))) => return Err(input(e)),
        Err(e) => return Ok(axiom_failure(path, &e)),
    };
    let (axioms, _) = checks(AXIOMS.iter().map(|a| (*a, true)));
    let integral = verify_integral_laws(&h);
    let identities = verify_relation_identities(&h);
    let fourier = verify_fourier_laws(&h);
    let passed = integral.all_passed() && identities.all_passed() && fourier.all_passed();
    let report = json!({
        "hopf": path.display().to_string(),
        "dim": h.dim(),
        "delta": h.delta().to_string(),
        "axioms": axioms,
        "integral": integral.checks,
        "identities": identities.checks,
        "fourier": fourier.laws,
        "passed": passed,
    });
    Ok((report, passed))
}

fn axiom_failure(path: &Path, e: &HopfError) -> (Value, bool) {
    let failed = e.check_name();
    let at = AXIOMS.iter().position(|a| *a == failed);
    let axioms: Vec<Value> = AXIOMS
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let status = match at {
                Some(j) if i < j => "passed",
                Some(j) if i == j => "failed",
                _ => "not reached",
            };
            json!({"name": a, "status": status})
        })
        .collect();
    (
        json!({"hopf": path.display().to_string(), "axioms": axioms, "failed": failed, "diagnostic": e.to_string(), "passed": false}),
        false,
    )
}

fn moves_on_network(h: &Hopf, n: &Network, relations: &[Move], check: bool) -> Outcome {
    let x = NetworkSum::single(n.clone());
    let before = x.evaluate(h).map_err(input)?;
    let mut all = true;
    let mut out = Vec::new();
    for &mv in relations {
        let sites = enumerate_sites(&x, mv, h);
        let mut entry = json!({"relation": mv.to_string(), "sites": sites.len()});
        if check {
            let mut preserved = 0;
            for site in &sites {
                let y = apply_move(&x, mv, site, h).map_err(input)?;
                let same = y.terms.iter().all(|(_, t)| t.is_planar()) && y.evaluate(h).map_err(input)? == before;
                preserved += usize::from(same);
            }
            all &= preserved == sites.len();
            entry["preserved"] = json!(preserved);
        }
        out.push(entry);
    }
    Ok((json!({"value": before.to_string(), "relations": out, "passed": all}), all))
}

fn from_tiling(e: TilingError) -> CliError {
    match e {
        TilingError::OutOfRange { k, max, .. } if k > max => CliError::Budget(format!("budget exceeded: {e}")),
        other => input(other),
    }
}

fn tilings(k: usize, want_graph: bool, dot: Option<&Path>, hopf: Option<&Path>, s: &Session) -> Outcome {
    let all = enumerate_tilings(k).map_err(from_tiling)?;
    let mut passed = true;
    let listing: Vec<Vec<[usize; 2]>> =
        all.iter().map(|t| t.diagonals.iter().map(|&(a, b)| [a, b]).collect()).collect();
    let mut report = json!({"k": k, "count": all.len(), "tilings": listing});
    if k <= 6 {
        let oracle = brute_force_tilings(k);
        passed &= oracle == all;
        report["oracle_count"] = json!(oracle.len());
    }
    if want_graph || dot.is_some() {
        let g = flip_graph(k).map_err(from_tiling)?;
        let c = g.connectivity();
        passed &= c.connected;
        report["flip_graph"] = json!({
            "vertices": g.vertices.len(),
            "edges": g.edges,
            "connected": c.connected,
            "components": c.components,
            "spanning_tree": c.spanning_tree,
        });
        if let Some(path) = dot {
            std::fs::write(path, g.to_dot()).map_err(|e| input(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    if let Some(path) = hopf {
        if k > MAX_TANGLE_K {
            return Err(CliError::Budget(format!("budget exceeded: tangles are built for k ≤ {MAX_TANGLE_K}")));
        }
        let h = load_hopf(path, s)?;
        let target = h.dim().pow(k as u32 - 1);
        let mut ranks = Vec::new();
        for t in &all {
            let x = tiling_to_tangle(t).map_err(from_tiling)?;
            let rank = surjectivity_gram(&h, &x, &s.budget).map_err(from_pairing)?;
            passed &= rank == target;
            ranks.push(rank);
        }
        report["surjectivity"] = json!({"expected": target, "ranks": ranks});
    }
    report["passed"] = json!(passed);
    Ok((report, passed))
}
