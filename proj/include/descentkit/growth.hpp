#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "descentkit/perm.hpp"
#include "descentkit/stat_triangle.hpp"
#include "descentkit/tableau.hpp"

namespace descentkit {

/// Evacuation growth diagram: partitions Lambda_{i,j} for 0 <= i <= j <= n.
///
/// Row i = 0 is the chain of the source tableau Q, the column j = n read
/// from i = n up to i = 0 is the chain of evac(Q), and Lambda_{i-1,j} is the
/// RSK shape of the factor pi_{[i,j]} whenever Q = Q(pi).
class GrowthDiagram {
public:
    GrowthDiagram() = default;
    explicit GrowthDiagram(int n);

    int n() const noexcept { return n_; }
    const Partition& at(int i, int j) const { return cells_[index(i, j)]; }
    Partition& at(int i, int j) { return cells_[index(i, j)]; }

private:
    std::size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<Partition> cells_;
};

/// Partitions nu with lower <= nu <= upper and |nu| = |lower| + 1 (at most two
/// when |upper| = |lower| + 2).
std::vector<Partition> sandwich_partitions(const Partition& lower, const Partition& upper);

/// Local rule: the sandwiched partition that differs from diagonal when two exist.
Partition growth_local_rule(const Partition& lower, const Partition& upper, const Partition& diagonal);

GrowthDiagram build_growth(const StandardTableau& q);

/// Schutzenberger involution, read from the right edge of the growth diagram.
StandardTableau evacuate(const StandardTableau& q);

/// Lambda_{i-1,j}: the RSK shape of pi_{[i,j]} when g was built from Q(pi).
const Partition& factor_shape(const GrowthDiagram& g, int i, int j);

/// a_{i,j} read from the growth diagram of Q(p).
StatTriangle stat_triangle(const GrowthDiagram& g);
StatTriangle stat_triangle(const Permutation& p);

/// Diamond layout; row h lists Lambda_{i,i+h} left to right, apex on top.
std::string render_ascii(const GrowthDiagram& g);
std::string render_dot(const GrowthDiagram& g);
/// {"n": n, "cells": [[i, j, [parts...]], ...]} in (i, j) order.
nlohmann::json to_json(const GrowthDiagram& g);

}  // namespace descentkit
