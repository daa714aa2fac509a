//! Gram matrices of the supported families, with basis labels.

use super::CatalogEntry;

pub static MAIN: &[CatalogEntry] = &[
    CatalogEntry {
        family: "rr",
        description: "Rubik's revenge 4x4x4",
        labels: &["H", "C"],
        gram: &[
            &[4, 6],
            &[6, 4],
        ],
        abs_det: 20,
    },
    CatalogEntry {
        family: "sym2rr",
        description: "4 x Sym2(4)",
        labels: &["L1", "L2", "P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"],
        gram: &[
            &[4, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[6, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            &[0, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, -2, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, -2, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, -2, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, -2, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, -2, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, -2, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -2],
        ],
        abs_det: 1024,
    },
    CatalogEntry {
        family: "hessian",
        description: "Sym3(4)",
        labels: &["H1", "H2", "L12", "L13", "L14", "L23", "L34", "P123", "P124", "P125", "P134", "P135", "P145", "P234", "P235", "P245"],
        gram: &[
            &[4, 6, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[6, 4, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            &[1, 0, -2, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
            &[1, 0, 0, -2, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0],
            &[1, 0, 0, 0, -2, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0],
            &[1, 0, 0, 0, 0, -2, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0],
            &[1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0, 1, 0, 0],
            &[0, 1, 1, 1, 0, 1, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 1, 0, 1, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 1, 1, 0, 1, 0, 0, 0, -2, 0, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0],
            &[0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0],
            &[0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, -2, 0, 0],
            &[0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2],
        ],
        abs_det: 48,
    },
    CatalogEntry {
        family: "pent",
        description: "penteract 2x2x2x2x2",
        labels: &["L1", "L2", "L3", "L4"],
        gram: &[
            &[0, 2, 2, 2],
            &[2, 0, 2, 2],
            &[2, 2, 0, 2],
            &[2, 2, 2, 0],
        ],
        abs_det: 48,
    },
    CatalogEntry {
        family: "2sympent",
        description: "2x2x2xSym2(2)",
        labels: &["L1", "L2", "L3", "L4", "E1", "E2", "E3", "E4", "E5"],
        gram: &[
            &[0, 2, 2, 2, 0, 0, 0, 0, 0],
            &[2, 0, 2, 2, 0, 0, 0, 0, 0],
            &[2, 2, 0, 2, 0, 0, 0, 0, 0],
            &[2, 2, 2, 0, 1, 1, 1, 1, 1],
            &[0, 0, 0, 1, -2, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, -2, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, -2, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, -2, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, -2],
        ],
        abs_det: 256,
    },
    CatalogEntry {
        family: "3sympent",
        description: "2x2xSym3(2)",
        labels: &["L1", "L2", "L3", "L4", "P1", "Q1", "P2", "Q2", "P3", "Q3", "P4", "Q4", "P5", "Q5"],
        gram: &[
            &[0, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[2, 2, 0, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
            &[2, 2, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0],
            &[0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -2, 1],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2],
        ],
        abs_det: 324,
    },
    CatalogEntry {
        family: "22sympent",
        description: "2xSym2(2)xSym2(2)",
        labels: &["L1", "L2", "L3", "L4", "P1", "Q1", "P2", "P3", "Q3", "P4", "P5", "Q5"],
        gram: &[
            &[0, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[2, 0, 2, 2, 0, 1, 0, 0, 1, 0, 0, 1],
            &[2, 2, 0, 2, 0, 1, 0, 0, 1, 0, 0, 1],
            &[2, 2, 2, 0, 1, 0, 1, 1, 0, 1, 1, 0],
            &[0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0],
            &[0, 1, 1, 0, 1, -2, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 1, -2, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, -2, 1, 0, 0, 0],
            &[0, 1, 1, 0, 0, 0, 0, 1, -2, 1, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 1, -2, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -2, 1],
            &[0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, -2],
        ],
        abs_det: 256,
    },
    CatalogEntry {
        family: "23sympent",
        description: "Sym2(2)xSym3(2)",
        labels: &["L1", "L2", "L3", "L4", "P1", "Q1", "P2", "Q2", "P3", "Q3", "P4", "Q4", "P5", "Q5", "E3"],
        gram: &[
            &[0, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            &[2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            &[2, 2, 0, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0],
            &[2, 2, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0],
            &[0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 1, 0, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 1, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 1],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -2, 1, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0],
            &[1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 0, -2],
        ],
        abs_det: 108,
    },
    CatalogEntry {
        family: "4sympent",
        description: "2xSym4(2)",
        labels: &["L1", "L2", "L3", "L4", "E12", "E13", "E14", "E42", "E43", "E22", "E23", "E24", "E52", "E53", "E32", "E33", "E34"],
        gram: &[
            &[0, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[2, 0, 2, 2, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 0],
            &[2, 2, 0, 2, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0],
            &[2, 2, 2, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 1, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2],
        ],
        abs_det: 96,
    },
    CatalogEntry {
        family: "5sympent",
        description: "Sym5(2)",
        labels: &["E1234", "E1423", "E1432", "E1324", "E1342", "E2143", "E2134", "E2413", "E2431", "E2314", "E2341", "E4123", "E4132", "E4213", "E4312", "E3124", "E3142", "E3214"],
        gram: &[
            &[-2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            &[0, -2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, -2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, -2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0],
            &[0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0],
            &[1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1, 0, 0, 1],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0],
            &[0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -2, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -2, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -2, 0],
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, -2],
        ],
        abs_det: 20,
    },
    CatalogEntry {
        family: "2224",
        description: "2x2x2x4",
        labels: &["H", "L1", "L2", "L3", "E1", "E2", "E3", "E5", "E6", "E7", "E9", "E10", "E11"],
        gram: &[
            &[4, 4, 4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[4, 0, 2, 2, 0, 0, 0, 1, 1, 1, 1, 1, 1],
            &[4, 2, 0, 2, 1, 1, 1, 0, 0, 0, 1, 1, 1],
            &[4, 2, 2, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, -2, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, -2, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, -2, 0, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, 0, -2, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0],
            &[0, 1, 1, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0],
            &[0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0],
            &[0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2],
        ],
        abs_det: 1024,
    },
    CatalogEntry {
        family: "22s24",
        description: "2x2xSym2(4)",
        labels: &["L1", "L3"],
        gram: &[
            &[0, 4],
            &[4, 4],
        ],
        abs_det: 16,
    },
    CatalogEntry {
        family: "sym22sym24",
        description: "Sym2(2)xSym2(4)",
        labels: &["L1", "L3", "E1", "E2", "E3", "E4", "E5", "E6", "E7"],
        gram: &[
            &[0, 4, 1, 1, 1, 1, 1, 1, 1],
            &[4, 4, 0, 0, 0, 0, 0, 0, 0],
            &[1, 0, -2, 0, 0, 0, 0, 0, 0],
            &[1, 0, 0, -2, 0, 0, 0, 0, 0],
            &[1, 0, 0, 0, -2, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0, -2, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0, -2, 0, 0],
            &[1, 0, 0, 0, 0, 0, 0, -2, 0],
            &[1, 0, 0, 0, 0, 0, 0, 0, -2],
        ],
        abs_det: 256,
    },
];

pub static CLASSICAL: &[CatalogEntry] = &[
    CatalogEntry {
        family: "U",
        description: "hyperbolic plane",
        labels: &["e1", "e2"],
        gram: &[
            &[0, 1],
            &[1, 0],
        ],
        abs_det: 1,
    },
    CatalogEntry {
        family: "bideg23",
        description: "bidegree (2,3) hypersurface in P1xP2",
        labels: &["L1", "L2"],
        gram: &[
            &[0, 3],
            &[3, 2],
        ],
        abs_det: 9,
    },
    CatalogEntry {
        family: "ci1122",
        description: "(1,1) and (2,2) complete intersection in P2xP2",
        labels: &["L1", "L2"],
        gram: &[
            &[2, 4],
            &[4, 2],
        ],
        abs_det: 12,
    },
    CatalogEntry {
        family: "ci1221",
        description: "(1,2) and (2,1) complete intersection in P2xP2",
        labels: &["L1", "L2"],
        gram: &[
            &[2, 5],
            &[5, 2],
        ],
        abs_det: 21,
    },
    CatalogEntry {
        family: "tri222",
        description: "tridegree (2,2,2) hypersurface in (P1)^3",
        labels: &["L1", "L2", "L3"],
        gram: &[
            &[0, 2, 2],
            &[2, 0, 2],
            &[2, 2, 0],
        ],
        abs_det: 16,
    },
];
