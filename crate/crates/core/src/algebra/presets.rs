//! Named small algebras used throughout the tests and the CLI.

use std::sync::Arc;

use super::{build_algebra, parse_presentation, FdAlgebra};

pub const A3R2_SPEC: &str = "field p=2\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation a*b\n";
pub const PPA2_SPEC: &str =
    "field p=2\nvertices 1 2\narrow x: 1 -> 2\narrow y: 2 -> 1\nrelation x*y\nrelation y*x\n";

/// Spec text of `k[t]/(t^k)`.
pub fn truncated_polynomial_spec(k: usize) -> String {
    let path = vec!["t"; k].join("*");
    format!("field p=2\nvertices 1\narrow t: 1 -> 1\nrelation {path}\n")
}

/// Spec text of the cyclic Nakayama algebra with `m` vertices and all paths of length `l` killed.
pub fn cyclic_nakayama_spec(m: usize, l: usize) -> String {
    let mut s = String::from("field p=2\nvertices");
    for v in 1..=m {
        s.push_str(&format!(" {v}"));
    }
    s.push('\n');
    for v in 1..=m {
        s.push_str(&format!("arrow a{v}: {v} -> {}\n", v % m + 1));
    }
    for v in 1..=m {
        let path: Vec<String> = (0..l).map(|k| format!("a{}", (v - 1 + k) % m + 1)).collect();
        s.push_str(&format!("relation {}\n", path.join("*")));
    }
    s
}

pub fn from_spec(text: &str) -> Arc<FdAlgebra> {
    let pres = parse_presentation(text).expect("preset spec parses");
    Arc::new(build_algebra(&pres).expect("preset is admissible"))
}

/// `k A_3 / rad²` over 𝔽₂.
pub fn a3r2() -> Arc<FdAlgebra> {
    from_spec(A3R2_SPEC)
}

/// Cyclic quiver on two vertices modulo all length-two paths, over 𝔽₂.
pub fn ppa2() -> Arc<FdAlgebra> {
    from_spec(PPA2_SPEC)
}

pub fn truncated_polynomial(k: usize) -> Arc<FdAlgebra> {
    from_spec(&truncated_polynomial_spec(k))
}

pub fn cyclic_nakayama(m: usize, l: usize) -> Arc<FdAlgebra> {
    from_spec(&cyclic_nakayama_spec(m, l))
}

/// Resolves a preset name (`A3R2`, `PPA2`, `NAK3`, `NAK<k>`, `CN<m>_<l>`) to its spec text.
pub fn preset_spec(name: &str) -> Option<String> {
    let upper = name.to_ascii_uppercase();
    match upper.as_str() {
        "A3R2" => Some(A3R2_SPEC.to_string()),
        "PPA2" => Some(PPA2_SPEC.to_string()),
        _ => {
            if let Some(k) = upper.strip_prefix("NAK").and_then(|k| k.parse::<usize>().ok()) {
                return (k >= 2).then(|| truncated_polynomial_spec(k));
            }
            let (m, l) = upper.strip_prefix("CN")?.split_once('_')?;
            let (m, l) = (m.parse::<usize>().ok()?, l.parse::<usize>().ok()?);
            (m >= 1 && l >= 2).then(|| cyclic_nakayama_spec(m, l))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_nakayama_dimensions() {
        // every vertex has paths of length 0..l-1
        for m in 1..=4 {
            for l in 2..=6 {
                assert_eq!(cyclic_nakayama(m, l).dim(), m * l);
            }
        }
    }

    #[test]
    fn ppa2_is_a_cyclic_nakayama_algebra() {
        assert_eq!(cyclic_nakayama(2, 2).fingerprint(), ppa2().fingerprint());
    }

    #[test]
    fn preset_names_resolve() {
        assert!(preset_spec("a3r2").is_some());
        assert!(preset_spec("NAK3").is_some());
        assert!(preset_spec("CN3_4").is_some());
        assert!(preset_spec("nope").is_none());
    }
}
