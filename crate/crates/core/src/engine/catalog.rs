//! Named groups: parametric families, small semidirect products given by
//! matrices, the Mathieu groups, and direct products of these.

use super::groupfile::GroupFile;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::permgroup::PermGroup;

/// A factor of a direct product: its name, the group on its own points,
/// and where those points sit in the product.
#[derive(Clone, Debug)]
pub struct Factor {
    pub name: String,
    pub group: PermGroup,
    pub offset: usize,
}

#[derive(Clone, Debug)]
pub struct GroupCatalogEntry {
    pub name: String,
    pub group: PermGroup,
    /// Present for direct products.
    pub factors: Option<Vec<Factor>>,
    pub declared_order: u128,
}

fn perm(n: usize, cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, cycles).expect("catalog cycles are valid")
}

fn cycle(n: usize, from: usize, to: usize) -> Perm {
    let c: Vec<usize> = (from..=to).collect();
    perm(n, &[&c])
}

pub fn cyclic(n: usize) -> PermGroup {
    if n == 1 {
        return PermGroup::trivial(1);
    }
    PermGroup::new(n, vec![cycle(n, 1, n)]).unwrap()
}

pub fn symmetric(n: usize) -> PermGroup {
    if n <= 1 {
        return PermGroup::trivial(1);
    }
    if n == 2 {
        return cyclic(2);
    }
    PermGroup::new(n, vec![cycle(n, 1, n), perm(n, &[&[1, 2]])]).unwrap()
}

pub fn alternating(n: usize) -> PermGroup {
    if n <= 2 {
        return PermGroup::trivial(n.max(1));
    }
    if n == 3 {
        return cyclic(3);
    }
    // (1,2,3) and an (n-1)- or n-cycle of even parity
    let long = if n % 2 == 1 { cycle(n, 1, n) } else { cycle(n, 2, n) };
    PermGroup::new(n, vec![perm(n, &[&[1, 2, 3]]), long]).unwrap()
}

/// Dihedral group of order `2m` on `m` points.
pub fn dihedral(m: usize) -> PermGroup {
    if m == 2 {
        return PermGroup::new(4, vec![perm(4, &[&[1, 2], &[3, 4]]), perm(4, &[&[1, 3], &[2, 4]])]).unwrap();
    }
    let refl: Vec<(usize, usize)> = (1..=m / 2).map(|i| (i + 1, m + 1 - i)).filter(|(a, b)| a < b).collect();
    let cyc: Vec<Vec<usize>> = refl.iter().map(|&(a, b)| vec![a, b]).collect();
    let cref: Vec<&[usize]> = cyc.iter().map(|c| c.as_slice()).collect();
    PermGroup::new(m, vec![cycle(m, 1, m), perm(m, &cref)]).unwrap()
}

/// Regular representation of the metacyclic group `<a, b>` with
/// `|a| = m`, `b a b^-1 = a^s`, `b^2 = a^t`, on the normal forms `a^i b^j`.
fn metacyclic_regular(m: usize, s: usize, t: usize) -> PermGroup {
    let n = 2 * m;
    let idx = |i: usize, j: usize| j * m + i % m;
    let mut ia = vec![0u8; n];
    let mut ib = vec![0u8; n];
    for j in 0..2 {
        for i in 0..m {
            ia[idx(i, j)] = idx(i + 1, j) as u8;
            // b a^i b^j = a^(s i) b^(j+1)
            let e = s * i % m;
            ib[idx(i, j)] = if j == 0 { idx(e, 1) } else { idx(e + t, 0) } as u8;
        }
    }
    PermGroup::new(n, vec![Perm::from_images(ia).unwrap(), Perm::from_images(ib).unwrap()]).unwrap()
}

/// Generalised quaternion group of order `2^n`.
pub fn quaternion(order: usize) -> PermGroup {
    let m = order / 2;
    metacyclic_regular(m, m - 1, m / 2)
}

/// Semidihedral group of order `2^n`, `n >= 4`.
pub fn semidihedral(order: usize) -> PermGroup {
    let m = order / 2;
    metacyclic_regular(m, m / 2 - 1, 0)
}

/// `C_p^n` as a regular group on `p^n` points.
pub fn elementary_abelian(p: usize, n: usize) -> PermGroup {
    affine(p, n, &[])
}

/// The subgroup of `AGL(n, p)` generated by the translations and the given
/// matrices (columns are the images of the basis vectors), on `p^n` points.
pub fn affine(p: usize, n: usize, mats: &[Vec<Vec<usize>>]) -> PermGroup {
    let size = p.pow(n as u32);
    let decode = |mut x: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &d| acc * p + d % p) };
    let mut gens = Vec::new();
    for i in 0..n {
        let im: Vec<u8> = (0..size)
            .map(|x| {
                let mut v = decode(x);
                v[i] = (v[i] + 1) % p;
                encode(&v) as u8
            })
            .collect();
        gens.push(Perm::from_images(im).unwrap());
    }
    for m in mats {
        let im: Vec<u8> = (0..size)
            .map(|x| {
                let v = decode(x);
                let w: Vec<usize> = (0..n).map(|r| (0..n).map(|c| m[c][r] * v[c]).sum::<usize>() % p).collect();
                encode(&w) as u8
            })
            .collect();
        gens.push(Perm::from_images(im).expect("matrix is invertible"));
    }
    if size == 1 {
        return PermGroup::trivial(1);
    }
    PermGroup::new(size, gens).unwrap()
}

fn primitive_root(p: usize) -> usize {
    (2..p)
        .find(|&g| (1..p - 1).all(|k| modpow(g, k, p) != 1))
        .unwrap_or(1)
}

fn modpow(b: usize, e: usize, m: usize) -> usize {
    (0..e).fold(1, |acc, _| acc * b % m)
}

/// `C_p : C_e` with the generator acting by `x -> x^s`, `s` of order `e`.
pub fn frobenius_cyclic(p: usize, e: usize) -> Result<PermGroup> {
    if (p - 1) % e != 0 {
        return Err(Error::Parse(format!("C{p}:C{e} needs e | p - 1")));
    }
    let s = modpow(primitive_root(p), (p - 1) / e, p);
    Ok(affine(p, 1, &[vec![vec![s]]]))
}

pub fn direct_product(factors: &[(String, PermGroup)]) -> (PermGroup, Vec<Factor>) {
    let total: usize = factors.iter().map(|(_, g)| g.degree()).sum();
    let mut gens = Vec::new();
    let mut out = Vec::new();
    let mut off = 0;
    for (name, g) in factors {
        for s in g.generators() {
            gens.push(s.shifted(off, total));
        }
        out.push(Factor { name: name.clone(), group: g.clone(), offset: off });
        off += g.degree();
    }
    (PermGroup::new(total, gens).unwrap(), out)
}

const MATHIEU_FILES: [(usize, &str, u128); 5] = [
    (11, include_str!("../../data/m11.json"), 7920),
    (12, include_str!("../../data/m12.json"), 95040),
    (22, include_str!("../../data/m22.json"), 443520),
    (23, include_str!("../../data/m23.json"), 10200960),
    (24, include_str!("../../data/m24.json"), 244823040),
];

/// Mathieu groups from their standard generators; the order is checked
/// against `|M_n|`.
pub fn mathieu(n: usize) -> Result<PermGroup> {
    let (_, text, order) = MATHIEU_FILES
        .iter()
        .find(|m| m.0 == n)
        .ok_or_else(|| Error::Parse(format!("no Mathieu group M{n}")))?;
    let g = GroupFile::parse(text)?.to_group()?;
    assert_eq!(g.order(), *order, "M{n} generators give the wrong order");
    Ok(g)
}

fn parse_num(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("bad number {s:?}")))
}

/// One factor name, no `x`.
fn atom(name: &str) -> Result<PermGroup> {
    let q8 = vec![vec![vec![0, 2], vec![1, 0]], vec![vec![2, 1], vec![1, 1]]];
    let sd16 = vec![vec![vec![0, 1], vec![1, 1]], vec![vec![1, 1], vec![0, 2]]];
    let g = match name {
        "trivial" | "1" => PermGroup::trivial(1),
        "C2^2:C3" => affine(2, 2, &[vec![vec![0, 1], vec![1, 1]]]),
        "C3^2:Q8" => affine(3, 2, &q8),
        "C3^2:SD16" => affine(3, 2, &sd16),
        "C3^2:C4" => affine(3, 2, &[q8[0].clone()]),
        "C3^2:C8" => affine(3, 2, &[sd16[0].clone()]),
        "C3^2:C2" => affine(3, 2, &[vec![vec![2, 0], vec![0, 2]]]),
        _ if name.starts_with('M') => mathieu(parse_num(&name[1..])?)?,
        _ if name.starts_with("SD") => {
            let n = parse_num(&name[2..])?;
            if n < 16 || !n.is_power_of_two() {
                return Err(Error::Parse(format!("SD{n}: order must be a power of two >= 16")));
            }
            semidihedral(n)
        }
        _ if name.starts_with('Q') => {
            let n = parse_num(&name[1..])?;
            if n < 8 || !n.is_power_of_two() {
                return Err(Error::Parse(format!("Q{n}: order must be a power of two >= 8")));
            }
            quaternion(n)
        }
        _ if name.starts_with('D') => {
            let n = parse_num(&name[1..])?;
            if n < 4 || n % 2 == 1 {
                return Err(Error::Parse(format!("D{n}: order must be even and >= 4")));
            }
            dihedral(n / 2)
        }
        _ if name.starts_with('S') => symmetric(parse_num(&name[1..])?),
        _ if name.starts_with('A') => alternating(parse_num(&name[1..])?),
        _ if name.starts_with('C') => {
            let body = &name[1..];
            if let Some((a, b)) = body.split_once(':') {
                let p = parse_num(a)?;
                let e = parse_num(b.trim_start_matches('C'))?;
                if !crate::fplinalg::is_prime(p as u32) {
                    return Err(Error::Parse(format!("C{p}:C{e} needs p prime")));
                }
                frobenius_cyclic(p, e)?
            } else if let Some((a, b)) = body.split_once('^') {
                let p = parse_num(a)?;
                let k = parse_num(b)?;
                if !crate::fplinalg::is_prime(p as u32) || p.pow(k as u32) > 256 {
                    return Err(Error::Parse(format!("C{p}^{k} unsupported")));
                }
                elementary_abelian(p, k)
            } else {
                let n = parse_num(body)?;
                if n == 0 || n > 256 {
                    return Err(Error::Parse(format!("C{n} unsupported")));
                }
                cyclic(n)
            }
        }
        _ => return Err(Error::Parse(format!("unknown group {name:?}"))),
    };
    Ok(g)
}

/// Look up a catalog name; `x` joins direct factors, e.g. `C2xS5`.
pub fn lookup(name: &str) -> Result<GroupCatalogEntry> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.iter().any(|s| s.is_empty()) {
        return Err(Error::Parse(format!("bad group name {name:?}")));
    }
    if parts.len() == 1 {
        let g = atom(name)?;
        return Ok(GroupCatalogEntry { name: name.to_string(), declared_order: g.order(), group: g, factors: None });
    }
    let fs: Vec<(String, PermGroup)> =
        parts.iter().map(|s| Ok((s.to_string(), atom(s)?))).collect::<Result<_>>()?;
    let declared: u128 = fs.iter().map(|(_, g)| g.order()).product();
    let (g, factors) = direct_product(&fs);
    if g.degree() > 256 {
        return Err(Error::Parse(format!("{name}: total degree above 256")));
    }
    assert_eq!(g.order(), declared);
    Ok(GroupCatalogEntry { name: name.to_string(), group: g, factors: Some(factors), declared_order: declared })
}

/// Catalog groups of order at most 100, used by the property suites.
pub const SMALL_GROUPS: &[&str] = &[
    "trivial", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C2^2", "C2^3", "C3^2", "S3", "D8", "Q8", "D10", "A4",
    "D12", "C5:C4", "C7:C3", "S4", "C2xS3", "C2xA4", "C3xS3", "SD16", "Q16", "D16", "C2xD8", "C3^2:C4", "C11:C5",
    "C3^2:Q8", "C2^2xS3", "S3xS3",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (name, n) in [
            ("trivial", 1u128),
            ("C7", 7),
            ("S4", 24),
            ("A5", 60),
            ("D8", 8),
            ("D10", 10),
            ("Q8", 8),
            ("Q16", 16),
            ("SD16", 16),
            ("C2^3", 8),
            ("C11:C5", 55),
            ("C2^2:C3", 12),
            ("C3^2:Q8", 72),
            ("C3^2:SD16", 144),
            ("C2xS5", 240),
            ("S3xA4", 72),
            ("C2^2xS3", 24),
            ("M11", 7920),
            ("M12", 95040),
            ("M22", 443520),
        ] {
            assert_eq!(lookup(name).unwrap().group.order(), n, "{name}");
        }
        assert!(lookup("Q12").is_err());
        assert!(lookup("foo").is_err());
    }

    #[test]
    fn small_groups_are_small() {
        for name in SMALL_GROUPS {
            assert!(lookup(name).unwrap().group.order() <= 100, "{name}");
        }
    }

    #[test]
    fn quaternion_has_one_involution() {
        let g = lookup("Q8").unwrap().group;
        let t = g.elements().unwrap();
        let inv = (0..t.len()).filter(|&i| t.perm(i).order() == 2).count();
        assert_eq!(inv, 1);
        assert!(!g.is_abelian());
    }
}
