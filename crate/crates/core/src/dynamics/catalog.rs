//! Automorphism matrices acting on row vectors of catalog bases.

use super::ActionEntry;

pub static ACTIONS: &[ActionEntry] = &[
    ActionEntry {
        name: "Phi_rr",
        family: "rr",
        matrix: &[
            &[-3, 8],
            &[-8, 21],
        ],
        order: None,
    },
    ActionEntry {
        name: "Phi_51234",
        family: "pent",
        matrix: &[
            &[-1, 0, 2, 2],
            &[-2, 1, 2, 4],
            &[-4, 2, 5, 6],
            &[-6, 2, 8, 11],
        ],
        order: None,
    },
    ActionEntry {
        name: "alpha_34_5",
        family: "pent",
        matrix: &[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[2, 2, -1, 0],
            &[2, 2, 0, -1],
        ],
        order: Some(2),
    },
    ActionEntry {
        name: "gamma1",
        family: "pent",
        matrix: &[
            &[1, 0, 0, 0],
            &[2, -1, 2, 0],
            &[6, -2, 3, 0],
            &[4, -2, 2, 1],
        ],
        order: None,
    },
    ActionEntry {
        name: "gamma2",
        family: "pent",
        matrix: &[
            &[1, -2, 2, 4],
            &[0, -1, 2, 2],
            &[0, -2, 3, 6],
            &[0, 0, 0, 1],
        ],
        order: None,
    },
    ActionEntry {
        name: "Phi_54321",
        family: "2sympent",
        matrix: &[
            &[5, 2, -4, 6, 0, 0, 0, 0, 0],
            &[2, 1, -2, 4, 0, 0, 0, 0, 0],
            &[2, 0, -1, 2, 0, 0, 0, 0, 0],
            &[1, 1, -1, 1, 0, 0, 0, 0, 0],
            &[1, 0, -1, 2, 1, 0, 0, 0, 0],
            &[1, 0, -1, 2, 0, 1, 0, 0, 0],
            &[1, 0, -1, 2, 0, 0, 1, 0, 0],
            &[1, 0, -1, 2, 0, 0, 0, 1, 0],
            &[1, 0, -1, 2, 0, 0, 0, 0, 1],
        ],
        order: None,
    },
    ActionEntry {
        name: "Phi_54123",
        family: "3sympent",
        matrix: &[
            &[-1, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[-2, 1, 2, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[-1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[-1, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0],
            &[-1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0],
            &[-1, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0],
            &[-1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
            &[-1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        ],
        order: None,
    },
    ActionEntry {
        name: "Phi_53214",
        family: "22sympent",
        matrix: &[
            &[1, 4, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 2, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
            &[1, 1, -1, 1, 0, -1, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0],
            &[1, 1, -1, 1, 0, 0, 0, 0, -1, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0],
            &[1, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, -1],
        ],
        order: None,
    },
    ActionEntry {
        name: "Phi_53214",
        family: "23sympent",
        matrix: &[
            &[2, -1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0],
            &[-1, -1, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0, 0, 1],
        ],
        order: None,
    },
    ActionEntry {
        name: "Phi_54321",
        family: "4sympent",
        matrix: &[
            &[-1, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[-1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 0, 0, 0, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[-1, 0, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, 0, 0, 0],
            &[-1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0],
            &[-1, 1, 1, -2, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0, -1],
            &[1, -1, 0, 2, -1, -1, 0, -1, -1, -1, -1, 0, -1, -1, -1, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1],
        ],
        order: Some(4),
    },
];
