#pragma once

#include <map>
#include <string>

#include "qkdsim/errors.hpp"

namespace qkdsim {

// Outcome labels mapped to probabilities (analytic) or counts (empirical).
struct DistTable {
    std::map<std::string, double> entries;

    double total() const;
    DistTable normalized() const;
    void add(const std::string& label, double weight = 1.0);
};

// Total variation distance (1/2) sum |p_a - p_b| on normalized tables.
double estimate_tv(const DistTable& a, const DistTable& b);

// Chi-square test of empirical counts against the uniform law over the
// table's cells; p-value via the regularized gamma survival function.
double chi_square_uniform(const DistTable& counts);

// Upper regularized incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
double gamma_q(double a, double x);

} // namespace qkdsim
