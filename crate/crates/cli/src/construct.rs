//! The `construct` command: named builder families rendered to files.

use bblab_core::complex::SimplicialComplex;
use bblab_core::constructions::{
    corpus, corpus_entry, cyclic_polytope_boundary, simplex_boundary, stacked_sphere,
};
use bblab_core::posets::{available_x_indices, construct_x, SimplicialPoset};

pub enum Built {
    Complex(SimplicialComplex, String),
    Poset(SimplicialPoset, String),
}

const FAMILIES: &str = "simplex D | cyclic D N | stacked D N | x-poset I D | corpus NAME";

pub fn build_family(family: &str, params: &[String]) -> Result<Built, String> {
    match family {
        "simplex" => {
            let [d] = usize_params::<1>(family, params)?;
            let k = simplex_boundary(d).map_err(|e| e.to_string())?;
            Ok(Built::Complex(k, format!("simplex_boundary_{d}")))
        }
        "cyclic" => {
            let [d, n] = usize_params::<2>(family, params)?;
            let k = cyclic_polytope_boundary(d, n).map_err(|e| e.to_string())?;
            Ok(Built::Complex(k, format!("cyclic_{d}_{n}")))
        }
        "stacked" => {
            let [d, n] = usize_params::<2>(family, params)?;
            let k = stacked_sphere(d, n).map_err(|e| e.to_string())?;
            Ok(Built::Complex(k, format!("stacked_{d}_{n}")))
        }
        "x-poset" => {
            let [i, d] = usize_params::<2>(family, params)?;
            let p = construct_x(i, d).map_err(|e| {
                format!("{e}; available indices for d={d}: {:?}", available_x_indices(d))
            })?;
            Ok(Built::Poset(p, format!("x_poset_{i}_{d}")))
        }
        "corpus" => {
            if params.len() != 1 {
                return Err(format!("corpus takes one name; corpus members: {}", corpus_names()));
            }
            build_corpus(&params[0])
        }
        other => {
            // Bare corpus names double as families so that `construct` and
            // `analyze` accept the same identifiers.
            if params.is_empty() && corpus_entry(other).is_some() {
                return build_corpus(other);
            }
            Err(format!(
                "unknown family {other:?}; families: {FAMILIES}; corpus members: {}",
                corpus_names()
            ))
        }
    }
}

fn build_corpus(name: &str) -> Result<Built, String> {
    let entry = corpus_entry(name)
        .ok_or_else(|| format!("unknown corpus member {name:?}; members: {}", corpus_names()))?;
    let k = entry.build().map_err(|e| e.to_string())?;
    Ok(Built::Complex(k, name.to_string()))
}

fn corpus_names() -> String {
    corpus().iter().map(|e| e.name).collect::<Vec<_>>().join(", ")
}

fn usize_params<const N: usize>(family: &str, params: &[String]) -> Result<[usize; N], String> {
    if params.len() != N {
        return Err(format!(
            "family {family:?} takes {N} integer parameter(s), got {}; families: {FAMILIES}",
            params.len()
        ));
    }
    let mut out = [0usize; N];
    for (slot, raw) in out.iter_mut().zip(params) {
        *slot = raw
            .parse()
            .map_err(|_| format!("parameter {raw:?} of family {family:?} is not an integer"))?;
    }
    Ok(out)
}
