//! One word through the whole chain: the tiles met by its axis, their
//! hull, the lifted domain and the cover certificates.

use pentile_core::bounds::{self, Bound};
use pentile_core::convexify::{
    self, boundary_walks, convexify_ordered, corner_word, distance_to_region, fill_stars,
    is_locally_convex, FillOrder,
};
use pentile_core::coxgroup::word_to_isometry;
use pentile_core::covers::{
    assemble_lift, LiftedDomain, check_fundamental_domain, check_rf_witness, embedded_lift_certificate,
    is_orbit_injective, rf_witness, LiftRule,
};
use pentile_core::hypgeo::{classify, Parity};
use pentile_core::tiling::{QuotientTileSet, TileRegion};
use pentile_core::{ConvexificationResult, NormalForm};
use serde::Serialize;

use crate::error::CliError;
use crate::real::Real;

/// Slack for the closed-distance checks on hull tiles.
pub const CHECK_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundJson {
    pub exact: Real,
    pub cap: Real,
}

impl From<Bound> for BoundJson {
    fn from(b: Bound) -> Self {
        BoundJson {
            exact: Real(b.exact),
            cap: Real(b.cap),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct DegenerateFlags {
    pub along_edges: bool,
    pub through_vertex: bool,
}

/// Everything measured for one axial word. Every `*_ok` flag that is false
/// also appears by name in `failures`.
#[derive(Clone, Debug, Serialize)]
pub struct SampleRecord {
    pub word: String,
    pub parity: &'static str,
    pub class: &'static str,
    pub ell: Real,
    pub k0: usize,
    pub k: usize,
    pub added: usize,
    pub rounds: usize,
    pub corner_words: Vec<String>,
    pub isolated_bad_ok: bool,
    pub convex_ok: bool,
    pub idempotent_ok: bool,
    pub confluent_ok: bool,
    pub additions_meet_s0_ok: bool,
    pub max_axis_distance: Real,
    pub within_2d0_ok: bool,
    pub area_ok: bool,
    pub lift_rule: &'static str,
    pub lift_size: usize,
    pub orbit_injective_ok: bool,
    pub fundamental_domain_ok: bool,
    pub embedded_ok: bool,
    pub rf_size: usize,
    pub rf_convex_ok: bool,
    pub rf_seam_interior_ok: bool,
    pub tessline: bool,
    pub bound_lift: BoundJson,
    pub bound_rf: BoundJson,
    pub lift_bound_ok: bool,
    pub rf_bound_ok: bool,
    pub ratio: Real,
    pub degenerate_flags: DegenerateFlags,
    pub failures: Vec<String>,
}

impl SampleRecord {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The record plus the intermediate objects, for figures.
pub struct Analysis {
    pub record: SampleRecord,
    pub s0: QuotientTileSet,
    pub hull: Option<ConvexificationResult>,
    pub lift: Option<LiftedDomain>,
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Preserving => "preserving",
        Parity::Reversing => "reversing",
    }
}

struct Checks(Vec<String>);

impl Checks {
    fn check(&mut self, name: &str, ok: bool) -> bool {
        if !ok {
            self.0.push(name.to_string());
        }
        ok
    }
}

/// Runs the full chain on `word`. A non-axial word is an error; failures
/// of later stages are recorded in the report instead.
pub fn analyze(word: &NormalForm) -> Result<Analysis, CliError> {
    let class = classify(&word_to_isometry(word))?;
    if !class.tag.is_axial() {
        return Err(CliError::NotAxial(class.tag));
    }
    let s0 = QuotientTileSet::s0(word)?;
    let ell = s0.period();
    let consts = bounds::constants();
    let d0 = consts.diameter;
    let flags = s0.degeneracy();
    let tessline = flags.along_edges;
    let mut checks = Checks(Vec::new());

    let (corner_words, isolated) = match boundary_walks(&s0) {
        Ok(walks) => {
            let words: Vec<_> = walks.iter().map(corner_word).collect();
            let ok = words.iter().all(|w| !w.has_adjacent_bad());
            (words.iter().map(|w| w.to_string()).collect(), ok)
        }
        Err(e) => {
            checks.0.push(format!("walk: {e}"));
            (Vec::new(), false)
        }
    };
    let isolated_bad_ok = checks.check("isolated_bad", isolated);

    let bound_lift = bounds::lift_index_bound(ell, tessline)?;
    let bound_rf = bounds::rf_index_bound(ell, tessline)?;
    let mut record = SampleRecord {
        word: word.to_string(),
        parity: parity_name(word.parity()),
        class: class.tag.name(),
        ell: Real(ell),
        k0: s0.len(),
        k: 0,
        added: 0,
        rounds: 0,
        corner_words,
        isolated_bad_ok,
        convex_ok: false,
        idempotent_ok: false,
        confluent_ok: false,
        additions_meet_s0_ok: false,
        max_axis_distance: Real(f64::NAN),
        within_2d0_ok: false,
        area_ok: false,
        lift_rule: "none",
        lift_size: 0,
        orbit_injective_ok: false,
        fundamental_domain_ok: false,
        embedded_ok: false,
        rf_size: 0,
        rf_convex_ok: false,
        rf_seam_interior_ok: false,
        tessline,
        bound_lift: bound_lift.into(),
        bound_rf: bound_rf.into(),
        lift_bound_ok: false,
        rf_bound_ok: false,
        ratio: Real(f64::NAN),
        degenerate_flags: DegenerateFlags {
            along_edges: flags.along_edges,
            through_vertex: flags.through_vertex,
        },
        failures: Vec::new(),
    };

    let res = match convexify::convexify(&s0) {
        Ok(r) => r,
        Err(e) => {
            checks.0.push(format!("convexify: {e}"));
            record.failures = checks.0;
            return Ok(Analysis {
                record,
                s0,
                hull: None,
                lift: None,
            });
        }
    };
    let hull = &res.hull;
    let k = hull.len();
    record.k = k;
    record.added = res.added.len();
    record.rounds = res.rounds;
    record.ratio = Real(k as f64 / ell);
    record.convex_ok = checks.check("convex", is_locally_convex(hull));
    let again = fill_stars(hull.clone(), |_, _| true, FillOrder::Ascending, usize::MAX);
    record.idempotent_ok = checks.check(
        "idempotent",
        again.map(|f| f.added.is_empty()).unwrap_or(false),
    );
    record.confluent_ok = checks.check(
        "confluent",
        convexify_ordered(&s0, FillOrder::Descending)
            .map(|o| o.hull.reps() == hull.reps())
            .unwrap_or(false),
    );
    record.additions_meet_s0_ok = checks.check(
        "additions_meet_s0",
        res.added
            .iter()
            .all(|t| distance_to_region(&s0, t.word()) <= CHECK_EPS),
    );
    let axis = hull.axis().geodesic();
    let far = hull
        .tiles()
        .flat_map(|t| t.vertices())
        .map(|v| axis.distance_to(&v))
        .fold(0.0, f64::max);
    record.max_axis_distance = Real(far);
    record.within_2d0_ok = checks.check("within_2d0", far <= 2.0 * d0 + CHECK_EPS);
    let area = bounds::hull_area_bound(ell)?;
    record.area_ok = checks.check(
        "area",
        k as f64 * std::f64::consts::FRAC_PI_2 <= area + CHECK_EPS,
    );
    record.lift_bound_ok = checks.check("lift_bound", k as f64 <= bound_lift.exact + CHECK_EPS);

    let lift = match assemble_lift(hull) {
        Ok(d) => Some(d),
        Err(e) => {
            checks.0.push(format!("lift: {e}"));
            None
        }
    };
    if let Some(d) = &lift {
        record.lift_rule = match d.rule() {
            LiftRule::Strip => "strip",
            LiftRule::Adjacency => "adjacency",
        };
        record.lift_size = d.len();
        checks.check("lift_size", d.len() == k);
        record.orbit_injective_ok = checks.check("orbit_injective", is_orbit_injective(hull, d));
        record.fundamental_domain_ok =
            checks.check("fundamental_domain", check_fundamental_domain(d).passed());
        record.embedded_ok = checks.check("embedded", embedded_lift_certificate(d));
        match rf_witness(d) {
            Ok(double) => {
                let rf = check_rf_witness(d, &double);
                record.rf_size = rf.tiles;
                checks.check("rf_size", rf.tiles == 2 * k);
                record.rf_convex_ok = checks.check("rf_convex", rf.locally_convex);
                record.rf_seam_interior_ok = checks.check("rf_seam_interior", rf.seam_interior);
                record.rf_bound_ok =
                    checks.check("rf_bound", rf.tiles as f64 <= bound_rf.exact + CHECK_EPS);
            }
            Err(e) => checks.0.push(format!("rf: {e}")),
        }
    }
    record.failures = checks.0;
    Ok(Analysis {
        record,
        s0,
        hull: Some(res),
        lift,
    })
}

/// Convenience for callers that only need the record.
pub fn run_word(word: &NormalForm) -> Result<SampleRecord, CliError> {
    analyze(word).map(|a| a.record)
}
