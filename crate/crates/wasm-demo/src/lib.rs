//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each entry point draws a seeded random instance, runs one library
//! operation on it and returns a plain struct whose getters hand typed arrays
//! to JavaScript. Nothing here touches `JsValue`, so the same code is tested
//! natively.

use wasm_bindgen::prelude::*;

use hypercut::generators::{gen_random_3graph, gen_random_uniform};
use hypercut::spectral::{sdp_energy_bound, DEFAULT_TOL};
use hypercut::{best_bipartition, eigen_decompose, solve_3cut_auto, Hypergraph, KCut, SamplePlan};

/// Largest vertex count the page offers; keeps every call interactive.
pub const MAX_VERTICES: usize = 120;

fn check_size(n: usize, min: usize) -> Result<(), String> {
    if (min..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(format!("n must lie in {min}..={MAX_VERTICES}, got {n}"))
    }
}

fn flat_edges(h: &Hypergraph) -> Vec<u32> {
    h.edges().iter().flat_map(|e| e.vertices().iter().map(|&v| v as u32)).collect()
}

/// Spectrum of the adjacency matrix of `G(n, p)`.
#[wasm_bindgen]
pub struct Spectrum {
    n: usize,
    edges: Vec<u32>,
    eigenvalues: Vec<f64>,
    energy: f64,
    certificate: f64,
}

#[wasm_bindgen]
impl Spectrum {
    #[wasm_bindgen(getter)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Endpoints of every edge, two entries per edge.
    pub fn edges(&self) -> Vec<u32> {
        self.edges.clone()
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigenvalues.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// `-½⟨X, A⟩` for the negative-eigenspace projector `X`.
    #[wasm_bindgen(getter)]
    pub fn certificate(&self) -> f64 {
        self.certificate
    }
}

#[wasm_bindgen]
pub fn spectrum(n: usize, p: f64, seed: u32) -> Result<Spectrum, String> {
    check_size(n, 1)?;
    let g = gen_random_uniform(2, n, p, u64::from(seed)).map_err(|e| e.to_string())?;
    let a = g.adjacency().map_err(|e| e.to_string())?;
    let eig = eigen_decompose(&a, DEFAULT_TOL).map_err(|e| e.to_string())?;
    Ok(Spectrum {
        n,
        edges: flat_edges(&g),
        eigenvalues: eig.eigenvalues().to_vec(),
        energy: eig.energy(),
        certificate: sdp_energy_bound(&a).map_err(|e| e.to_string())?,
    })
}

/// A spectral 2-cut of `G(n, p)`.
#[wasm_bindgen]
pub struct Bipartition {
    n: usize,
    edges: Vec<u32>,
    sides: Vec<u8>,
    cut: u64,
    m: u64,
    energy: f64,
}

#[wasm_bindgen]
impl Bipartition {
    #[wasm_bindgen(getter)]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> Vec<u32> {
        self.edges.clone()
    }

    /// Side (0 or 1) of every vertex.
    pub fn sides(&self) -> Vec<u8> {
        self.sides.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn cut(&self) -> u64 {
        self.cut
    }

    #[wasm_bindgen(getter)]
    pub fn m(&self) -> u64 {
        self.m
    }

    /// `cut - m/2`.
    #[wasm_bindgen(getter)]
    pub fn surplus(&self) -> f64 {
        self.cut as f64 - self.m as f64 / 2.0
    }

    #[wasm_bindgen(getter)]
    pub fn energy(&self) -> f64 {
        self.energy
    }
}

#[wasm_bindgen]
pub fn bipartition(n: usize, p: f64, seed: u32, trials: usize) -> Result<Bipartition, String> {
    check_size(n, 1)?;
    let g = gen_random_uniform(2, n, p, u64::from(seed)).map_err(|e| e.to_string())?;
    let a = g.adjacency().map_err(|e| e.to_string())?;
    let split = best_bipartition(&a, trials, u64::from(seed)).map_err(|e| e.to_string())?;
    let sides: Vec<u8> = split.assignment().iter().map(|&s| s as u8).collect();
    let cut = g.cut_size(&split.assignment(), 2).map_err(|e| e.to_string())?;
    Ok(Bipartition {
        n,
        edges: flat_edges(&g),
        sides,
        cut,
        m: g.edge_count(),
        energy: eigen_decompose(&a, DEFAULT_TOL).map_err(|e| e.to_string())?.energy(),
    })
}

/// A 3-cut of a random 3-graph from the sampling solver.
#[wasm_bindgen]
pub struct ThreeCut {
    n: usize,
    triples: Vec<u32>,
    parts: Vec<u8>,
    cut: u64,
    m: u64,
    surplus: f64,
    surplus_text: String,
}

#[wasm_bindgen]
impl ThreeCut {
    #[wasm_bindgen(getter)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices of every triple, three entries per edge.
    pub fn triples(&self) -> Vec<u32> {
        self.triples.clone()
    }

    /// Part (0, 1 or 2) of every vertex.
    pub fn parts(&self) -> Vec<u8> {
        self.parts.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn cut(&self) -> u64 {
        self.cut
    }

    #[wasm_bindgen(getter)]
    pub fn m(&self) -> u64 {
        self.m
    }

    /// `cut - 2m/9`.
    #[wasm_bindgen(getter)]
    pub fn surplus(&self) -> f64 {
        self.surplus
    }

    /// The surplus as an exact fraction.
    #[wasm_bindgen(getter, js_name = surplusText)]
    pub fn surplus_text(&self) -> String {
        self.surplus_text.clone()
    }
}

#[wasm_bindgen(js_name = threeCut)]
pub fn three_cut(n: usize, p: f64, seed: u32, rounds: usize) -> Result<ThreeCut, String> {
    check_size(n, 3)?;
    let h = gen_random_3graph(n, p, u64::from(seed)).map_err(|e| e.to_string())?;
    let plan = SamplePlan { rounds, ..SamplePlan::with_seed(u64::from(seed)) };
    let cut: KCut = solve_3cut_auto(&h, &plan).map_err(|e| e.to_string())?;
    let s = cut.surplus();
    Ok(ThreeCut {
        n,
        triples: flat_edges(&h),
        parts: cut.assignment().iter().map(|&q| q as u8).collect(),
        cut: cut.cut_value(),
        m: h.edge_count(),
        surplus: cut.surplus_f64(),
        surplus_text: format!("{}/{}", s.numer(), s.denom()),
    })
}
