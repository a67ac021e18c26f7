//! Exact computation workbench for proper total difference labelings (TDLs)
//! of finite graphs and periodic labelings of infinite lattices.
//!
//! A total difference labeling assigns positive integer labels to vertices;
//! each edge receives the absolute difference of its endpoint labels. The
//! labeling is proper when adjacent vertices differ, edges sharing a vertex
//! differ, and no vertex label equals an incident edge label. `chi_td(G)` is
//! the least `k` such that a proper labeling with labels in `1..=k` exists.
//!
//! Modules:
//! - [`graphs`]: graph type, named builders, products, canonical forms,
//!   enumeration of small connected graphs, graph6 / edge-list I/O.
//! - [`labeling`]: the labeling data model and the exact validity checker.
//! - [`wsr`]: well-spaced rows (no doubling pair, no 3-term arithmetic
//!   progression) and the extremal sequences OS, E, D, Mi1, Mi2, J.
//! - [`starelim`]: star-elimination lower bounds for regular graphs.
//! - [`solver`]: exact decision / optimization / enumeration of labelings.
//! - [`lattice`]: periodic labelings of the square, hexagonal, triangular
//!   and cubic lattices, plus the infinite binary tree rule map.
//! - [`analysis`]: saturability classification, small-order surveys, and
//!   clone / Cartesian-product bound checks.

pub mod analysis;
pub mod graphs;
pub mod labeling;
pub mod lattice;
pub mod solver;
pub mod starelim;
pub mod wsr;
