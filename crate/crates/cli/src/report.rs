//! Emitters for the reporting subcommands. Everything written here is a
//! frozen contract covered by golden tests.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use plandscape_core::{
    degree, degree_histogram, extremal_orbits, extremal_witness, landscape_row, max_degree,
    spectrum, LandscapeRow, OrbitKind, Partition,
};

use crate::{with_pool, ExtremalArgs, Format, HistArgs, SpectrumArgs, TableArgs, WitnessArgs};

#[derive(Serialize)]
struct RowJson {
    n: u64,
    rho: u64,
    nu: u64,
    delta: u64,
    m_delta: u64,
    m_delta_sc: u64,
    s: u64,
}

impl From<&LandscapeRow> for RowJson {
    fn from(r: &LandscapeRow) -> Self {
        RowJson {
            n: r.n,
            rho: r.rho,
            nu: r.nu,
            delta: r.delta,
            m_delta: r.m_delta,
            m_delta_sc: r.m_delta_sc,
            s: r.s,
        }
    }
}

pub(crate) fn write_table(args: &TableArgs, w: &mut dyn Write) -> io::Result<()> {
    let rows = with_pool(args.jobs, || {
        let mut rows: Vec<LandscapeRow> = (args.from..=args.to)
            .into_par_iter()
            .map(landscape_row)
            .collect();
        // Workers hand rows to an ordered collector keyed by n.
        rows.sort_unstable_by_key(|r| r.n);
        rows
    });
    match args.format {
        Format::Csv => {
            writeln!(w, "n,rho,nu,delta,m_delta,m_delta_sc,s")?;
            for r in &rows {
                writeln!(
                    w,
                    "{},{},{},{},{},{},{}",
                    r.n, r.rho, r.nu, r.delta, r.m_delta, r.m_delta_sc, r.s
                )?;
            }
            Ok(())
        }
        Format::Json => {
            let json: Vec<RowJson> = rows.iter().map(RowJson::from).collect();
            write_json(w, &json)
        }
    }
}

pub(crate) fn write_hist(args: &HistArgs, w: &mut dyn Write) -> io::Result<()> {
    let hist = degree_histogram(args.n);
    let delta = max_degree(args.n).delta;
    assert_eq!(
        hist.max_degree(),
        Some(delta),
        "closed-form maximal degree disagrees with enumeration at n = {}; this is a bug",
        args.n
    );
    let min = hist
        .min_degree()
        .expect("n >= 1 has at least one partition");
    match args.format {
        Format::Csv => {
            writeln!(w, "degree,count")?;
            for d in min..=delta {
                writeln!(w, "{},{}", d, hist.counts.get(&d).copied().unwrap_or(0))?;
            }
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Bin {
                degree: u64,
                count: u64,
            }
            let bins: Vec<Bin> = (min..=delta)
                .map(|d| Bin {
                    degree: d,
                    count: hist.counts.get(&d).copied().unwrap_or(0),
                })
                .collect();
            write_json(w, &bins)
        }
    }
}

#[derive(Serialize)]
struct OrbitJson {
    representative: Vec<u64>,
    kind: &'static str,
    orbit_size: usize,
}

#[derive(Serialize)]
struct ExtremalJson {
    n: u64,
    delta: u64,
    m_delta: u64,
    m_delta_sc: u64,
    orbits: Vec<OrbitJson>,
}

pub(crate) fn write_extremal(args: &ExtremalArgs, w: &mut dyn Write) -> io::Result<()> {
    let orbits = extremal_orbits(args.n);
    let m_delta: usize = orbits.iter().map(|o| o.orbit_size).sum();
    let m_delta_sc = orbits
        .iter()
        .filter(|o| o.kind == OrbitKind::SelfConjugate)
        .count();
    let json = ExtremalJson {
        n: args.n,
        delta: max_degree(args.n).delta,
        m_delta: m_delta as u64,
        m_delta_sc: m_delta_sc as u64,
        orbits: orbits
            .iter()
            .map(|o| OrbitJson {
                representative: flat_parts(&o.representative),
                kind: match o.kind {
                    OrbitKind::SelfConjugate => "self-conjugate",
                    OrbitKind::ConjugatePair => "conjugate-pair",
                },
                orbit_size: o.orbit_size,
            })
            .collect(),
    };
    write_json(w, &json)
}

#[derive(Serialize)]
struct WitnessJson {
    n: u64,
    rho: u64,
    nu: u64,
    delta: u64,
    witness: Vec<u64>,
    degree: u64,
}

pub(crate) fn write_witness(args: &WitnessArgs, w: &mut dyn Write) -> io::Result<()> {
    let ctx = max_degree(args.n);
    let witness = extremal_witness(args.n);
    let json = WitnessJson {
        n: ctx.n,
        rho: ctx.rho,
        nu: ctx.nu,
        delta: ctx.delta,
        degree: degree(&witness),
        witness: flat_parts(&witness),
    };
    write_json(w, &json)
}

pub(crate) fn write_spectrum(args: &SpectrumArgs, w: &mut dyn Write) -> io::Result<()> {
    writeln!(w, "degree")?;
    for d in spectrum(args.n) {
        writeln!(w, "{d}")?;
    }
    Ok(())
}

fn flat_parts(p: &Partition) -> Vec<u64> {
    p.parts().collect()
}

fn write_json<T: Serialize>(w: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *w, value)?;
    writeln!(w)
}
