//! Named identities used throughout the crate.

use super::{parse_identity, parse_map, Identity, MultilinearMap};

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub source: &'static str,
    /// Characteristic assumptions and relations to other entries.
    pub note: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        source: "anticommutativity : x,y | x*y + y*x = 0",
        note: "structural for every Algebra value",
    },
    CatalogEntry {
        source: "jacobi : x,y,z | J(x,y,z) = 0",
        note: "Lie algebras",
    },
    CatalogEntry {
        source: "malcev : x,y,z | J(x,y,x*z) = J(x,y,z)*x",
        note: "Malcev algebras; decided through its full linearization",
    },
    CatalogEntry {
        source: "first_type_cyclic : x,y,z,u | J(x*y,z,u) + J(y*z,x,u) + J(z*x,y,u) = 0",
        note: "with first_type_derivation, defines first type; implies malcev when char != 2",
    },
    CatalogEntry {
        source: "first_type_derivation : x,y,u,v | J(x,y,u*v) = J(x,y,u)*v - J(x,y,v)*u",
        note: "with first_type_cyclic, defines first type",
    },
    CatalogEntry {
        source: "second_type_left : x,y,z | J(x,y,z)*x = 0",
        note: "with second_type_right and malcev, defines second type",
    },
    CatalogEntry {
        source: "second_type_right : x,y,z | J(x,y,x*z) = 0",
        note: "with second_type_left and malcev, defines second type",
    },
    CatalogEntry {
        source: "jacobian_product_zero : x,y,u,v | J(x,y,u*v) = 0",
        note: "malcev plus this is first type (char != 2)",
    },
    CatalogEntry {
        source: "jacobian_annihilator : x,y,z,u | J(x,y,z)*u = 0",
        note: "equivalent to jacobian_product_zero for Malcev algebras when char != 2, 3",
    },
    CatalogEntry {
        source: "malcev_linearized : x,y,z,w | J(x,y,w*z) = J(x,y,z)*w + J(w,y,z)*x - J(w,y,x*z)",
        note: "holds in every Malcev algebra",
    },
    CatalogEntry {
        source: "malcev_u_expansion : x,y,z,u | -2 u*J(x,y,z) = -J(u,x,y*z) - J(u,y,z*x) - J(u,z,x*y)",
        note: "holds in every Malcev algebra",
    },
    CatalogEntry {
        source: "malcev_wx_expansion : w,x,y,z | 3 J(w*x,y,z) = J(x,y,z)*w - J(y,z,w)*x - 2 J(z,w,x)*y + 2 J(w,x,y)*z",
        note: "holds in every Malcev algebra",
    },
    CatalogEntry {
        source: "malcev_product_jacobian : w,x,y,z | J(w*x,y,z) = w*J(x,y,z) + J(w,y,z)*x - 2 J(y*z,w,x)",
        note: "holds in every Malcev algebra; the variant with +2 J(y*z,w,x) fails on the 7-dimensional simple one",
    },
    CatalogEntry {
        source: "second_type_wj : w,x,y,z | 2 w*J(x,y,z) = 3 J(w,x,y*z)",
        note: "holds in every second-type Malcev algebra (char != 2)",
    },
];

const MAPS: &[&str] = &[
    "xi : x1,x2,x3,x4 | J(x1,x2,x3*x4)",
    "zeta : x1,x2,x3,x4 | J(x1,x2,x3)*x4",
    "varsigma : x1,x2,x3,x4,x5 | J(x1*x2,x3*x4,x5)",
];

pub fn catalog_entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn builtin_catalog() -> Vec<Identity> {
    ENTRIES
        .iter()
        .map(|e| parse_identity(e.source).expect("catalog entry parses"))
        .collect()
}

pub fn lookup(name: &str) -> Option<Identity> {
    builtin_catalog().into_iter().find(|i| i.name() == name)
}

/// Multilinear maps whose skew-symmetry characterizes second-type algebras.
pub fn builtin_maps() -> Vec<MultilinearMap> {
    MAPS.iter().map(|s| parse_map(s).expect("catalog map parses")).collect()
}

pub fn lookup_map(name: &str) -> Option<MultilinearMap> {
    builtin_maps().into_iter().find(|m| m.name() == name)
}
