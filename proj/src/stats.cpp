#include "qkdsim/stats.hpp"

#include <cmath>

namespace qkdsim {

double DistTable::total() const {
    double s = 0;
    for (const auto& [label, w] : entries) s += w;
    return s;
}

DistTable DistTable::normalized() const {
    double s = total();
    if (s <= 0) throw InsufficientCounts("DistTable: empty table");
    DistTable out;
    for (const auto& [label, w] : entries) out.entries[label] = w / s;
    return out;
}

void DistTable::add(const std::string& label, double weight) {
    entries[label] += weight;
}

double estimate_tv(const DistTable& a, const DistTable& b) {
    DistTable pa = a.normalized();
    DistTable pb = b.normalized();
    if (pa.entries.size() != pb.entries.size())
        throw LabelMismatch("estimate_tv: label sets differ");
    double d = 0;
    for (const auto& [label, p] : pa.entries) {
        auto it = pb.entries.find(label);
        if (it == pb.entries.end())
            throw LabelMismatch("estimate_tv: label missing: " + label);
        d += std::fabs(p - it->second);
    }
    return d / 2.0;
}

namespace {

// Lower regularized incomplete gamma by series expansion; valid for x < a+1.
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma by continued fraction; valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_uniform(const DistTable& counts) {
    std::size_t cells = counts.entries.size();
    if (cells < 2) throw InsufficientCounts("chi_square_uniform: need >= 2 cells");
    double n = counts.total();
    double expected = n / double(cells);
    if (expected < 5.0)
        throw InsufficientCounts("chi_square_uniform: expected count below 5 per cell");
    double stat = 0;
    for (const auto& [label, c] : counts.entries) {
        double d = c - expected;
        stat += d * d / expected;
    }
    return gamma_q(double(cells - 1) / 2.0, stat / 2.0);
}

} // namespace qkdsim
