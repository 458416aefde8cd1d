/// Size limits for the exponential-time routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum ambient variable count for the Betti oracle and Stanley-Reisner enumeration.
    pub oracle_vars: usize,
    /// Maximum face count of a single restriction `Δ|_W`.
    pub restriction_faces: usize,
    /// Maximum generator count for Scarf complex enumeration.
    pub scarf_gens: usize,
    /// Maximum facet count for the shellability search.
    pub shelling_facets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            oracle_vars: 16,
            restriction_faces: 1 << 16,
            scarf_gens: 20,
            shelling_facets: 12,
        }
    }
}
