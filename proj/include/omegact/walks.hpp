#pragma once

#include <optional>
#include <vector>

#include "omegact/series.hpp"

namespace omegact {

struct LatticeStep {
    long dx = 0, dy = 0;
    Rational weight = 1;
};

// Γ(S) = t·gamma, gamma over the order (x, y).
struct StepSet {
    ElliottRational gamma;
    std::optional<std::vector<LatticeStep>> finite_steps;

    static StepSet from_steps(const std::vector<LatticeStep>& steps);
    static StepSet from_gamma(const ElliottRational& gamma);
    static StepSet ordinary_lattice();
};

const VariableOrder& walk_order();   // (x, y)
const VariableOrder& x_order();      // (x)
const VariableOrder& y_order();      // (y)
const VariableOrder& scalar_order(); // no variables

// Σ_n t^n gamma^n, i.e. Γ(S*) = 1/(1 - Γ(S)).
TruncatedSeries free_walks(const StepSet& s, std::size_t n);

struct SlitPlane {
    TruncatedSeries sx;       // bilateral walks, CT_y Γ(S*)
    TruncatedSeries log_sx;
    TruncatedSeries log_s0;   // PT_x log S_x
    TruncatedSeries s0;
    TruncatedSeries bridge;   // B(1/x, t) = 1 - 1/((S_x)_0 (S_x)_-)
    TruncatedSeries s_p0;     // [x^p] log S_x, scalar coefficients
};

SlitPlane slit_plane(const StepSet& s, std::size_t n, int p = 1);

// S(x, y; t) = 1 / ((1 - Γ(S)) (S_x)_0 (S_x)_-), over (x, y).
TruncatedSeries slit_walks(const StepSet& s, const SlitPlane& sp);

// a_{-i,-i}(2n) of the ordinary lattice by the closed form, for 1 ≤ i ≤ n.
Rational conj1_value(long i, long n);

struct BoundedDyck {
    TruncatedSeries y;  // tC(t^2)
    TruncatedSeries b, top;
    TruncatedSeries h;  // over (y)
};

// Heights 0..m-1; m = 0 means unbounded (T = 0).
BoundedDyck dyck_bounded(long m, std::size_t n);

struct QuarterPlane {
    TruncatedSeries x_root;  // X over (y)
    TruncatedSeries v;       // over (y)
    TruncatedSeries h;       // over (x)
    TruncatedSeries o;       // scalar
    TruncatedSeries q;       // over (x, y)
};

// Step sets invariant under y -> 1/y and x -> 1/x with |dx|, |dy| ≤ 1.
QuarterPlane quarter_plane_symmetric(const StepSet& s, std::size_t n);

struct CatalanPaths {
    TruncatedSeries b;   // root of x - x^2 - y, in y
    TruncatedSeries ptt; // p(t, t): paths never above y = x by length
};

CatalanPaths catalan_paths(std::size_t n);

}  // namespace omegact
