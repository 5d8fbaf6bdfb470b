//! Structural facts about the Chermak-Delgado lattice, checked on one group
//! at a time. Each check returns a description of the first failure.

use std::collections::BTreeSet;

use cdlat_core::cd::{cd_lattice, check_interval_lemma, CdReport};
use cdlat_core::{factorize, prime_power, Bitset, Group, Limits, SubgroupLattice};

pub type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn closed_under_join_and_meet(lat: &SubgroupLattice, r: &CdReport) -> Check {
    let g = lat.group();
    for a in &r.members {
        for b in &r.members {
            ensure(r.contains(lat, &g.join(a, b)), || {
                format!("join of orders {} and {} leaves CD", a.order(), b.order())
            })?;
            ensure(r.contains(lat, &g.meet(a, b)), || {
                format!("meet of orders {} and {} leaves CD", a.order(), b.order())
            })?;
        }
    }
    Ok(())
}

pub fn members_contain_center(lat: &SubgroupLattice, r: &CdReport) -> Check {
    let z = lat.group().center();
    for h in &r.members {
        ensure(z.is_subgroup_of(h), || {
            format!("member of order {} misses the center", h.order())
        })?;
    }
    Ok(())
}

pub fn members_subnormal(lat: &SubgroupLattice, r: &CdReport) -> Check {
    for h in &r.members {
        ensure(lat.group().is_subnormal(h), || {
            format!("member of order {} is not subnormal", h.order())
        })?;
    }
    Ok(())
}

/// At most one member is a Sylow p-subgroup, and such a member is normal.
pub fn at_most_one_sylow_member(lat: &SubgroupLattice, r: &CdReport) -> Check {
    let g = lat.group();
    for (p, _) in factorize(g.order()) {
        let sylow_order = lat.sylow_data(p).sylow_order;
        let sylow_members: Vec<_> = r
            .members
            .iter()
            .filter(|h| h.order() == sylow_order)
            .collect();
        ensure(sylow_members.len() <= 1, || {
            format!("{} Sylow {p}-subgroups in CD", sylow_members.len())
        })?;
        for h in sylow_members {
            ensure(g.is_normal(h), || {
                format!("Sylow {p}-subgroup in CD is not normal")
            })?;
        }
    }
    Ok(())
}

pub fn delta_bounds_sylow_count(lat: &SubgroupLattice, r: &CdReport) -> Check {
    let n: usize = factorize(lat.group().order())
        .into_iter()
        .map(|(p, _)| lat.sylow_data(p).count)
        .sum();
    ensure(r.delta >= n, || {
        format!("delta {} < {n} nontrivial Sylow subgroups", r.delta)
    })
}

pub fn delta_bounds_prime_order_count(lat: &SubgroupLattice, r: &CdReport) -> Check {
    let n = lat
        .subgroups()
        .iter()
        .filter(|h| cdlat_core::is_prime(h.order()))
        .count();
    ensure(r.delta >= n, || {
        format!("delta {} < {n} subgroups of prime order", r.delta)
    })
}

pub fn trivial_member_excludes_p_groups(lat: &SubgroupLattice, r: &CdReport) -> Check {
    if !r.contains(lat, lat.trivial()) {
        return Ok(());
    }
    for h in &r.members {
        ensure(prime_power(h.order()).is_none(), || {
            format!("1 and a p-group of order {} are both in CD", h.order())
        })?;
    }
    Ok(())
}

pub fn interval_lemma(lat: &SubgroupLattice, r: &CdReport, limits: &Limits) -> Check {
    for h in &r.members {
        let ok = check_interval_lemma(lat, r, h, limits).map_err(|e| e.to_string())?;
        ensure(ok, || {
            format!("interval lemma fails for a member of order {}", h.order())
        })?;
    }
    Ok(())
}

pub fn delta_is_complement(lat: &SubgroupLattice, r: &CdReport) -> Check {
    ensure(
        r.delta + r.cd_size() == lat.len() && r.total_subgroups == lat.len(),
        || "delta is not the number of subgroups outside CD".into(),
    )
}

/// Every single-group property, labelled.
pub fn check_group(g: &Group, limits: &Limits) -> Result<(), (&'static str, String)> {
    let lat = SubgroupLattice::enumerate(g, limits).map_err(|e| ("enumerate", e.to_string()))?;
    let r = cd_lattice(&lat).map_err(|e| ("cd_lattice", e.to_string()))?;
    let checks: [(&'static str, Check); 9] = [
        ("closure", closed_under_join_and_meet(&lat, &r)),
        ("center", members_contain_center(&lat, &r)),
        ("subnormal", members_subnormal(&lat, &r)),
        ("sylow_member", at_most_one_sylow_member(&lat, &r)),
        ("sylow_count", delta_bounds_sylow_count(&lat, &r)),
        (
            "prime_order_count",
            delta_bounds_prime_order_count(&lat, &r),
        ),
        ("trivial_member", trivial_member_excludes_p_groups(&lat, &r)),
        ("interval", interval_lemma(&lat, &r, limits)),
        ("complement", delta_is_complement(&lat, &r)),
    ];
    for (name, c) in checks {
        c.map_err(|e| (name, e))?;
    }
    Ok(())
}

/// `CD(g x h)` is exactly the set of products `A x B` of members.
pub fn cd_of_product(g: &Group, h: &Group, limits: &Limits) -> Check {
    let gh = Group::direct_product(g, h, limits).map_err(|e| e.to_string())?;
    let report = |x: &Group| -> Result<BTreeSet<Bitset>, String> {
        let lat = SubgroupLattice::enumerate(x, limits).map_err(|e| e.to_string())?;
        let r = cd_lattice(&lat).map_err(|e| e.to_string())?;
        Ok(r.members.iter().map(|m| m.members().clone()).collect())
    };
    let (cg, ch, cgh) = (report(g)?, report(h)?, report(&gh)?);
    let (k, n) = (h.order(), gh.order());
    let expected: BTreeSet<Bitset> = cg
        .iter()
        .flat_map(|a| {
            ch.iter().map(move |b| {
                Bitset::from_indices(n, a.iter().flat_map(|x| b.iter().map(move |y| x * k + y)))
            })
        })
        .collect();
    ensure(cgh == expected, || {
        format!(
            "|CD(g x h)| = {}, expected {} products",
            cgh.len(),
            expected.len()
        )
    })
}
