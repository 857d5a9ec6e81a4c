#pragma once

#include <ostream>
#include <vector>

#include "qga/oracle/oracle.hpp"

namespace qga::cli {

// Zero-set points of a single implicit equation: sign changes along the
// edges of a regular grid with spacing `step`, refined by bisection. Output
// follows row-major grid order (last axis fastest), edges in axis order.
std::vector<std::vector<double>> sample_zero_set(const ImplicitPolynomial<double>& p, const Box& box, double step);

// "x,y[,z]" header, then one point per line.
void write_csv(std::ostream& out, const std::vector<std::vector<double>>& points, int n);

}  // namespace qga::cli
