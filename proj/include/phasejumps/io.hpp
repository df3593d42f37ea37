// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "phasejumps/detect.hpp"
#include "phasejumps/field.hpp"

namespace pj {

/// Parse/format failure with a 1-based line (and column when known).
class io_error : public std::runtime_error {
public:
    io_error(const std::string& path, int line, int column, const std::string& msg);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// PJF1 field file: "PJF1" / "L delta pad_steps" / "nrows ncols" / one
/// "re im" line per sample, row-major from the most negative (x, y), 17
/// significant digits. Round-trips doubles bit-exactly.
void write_field(const ComplexField& field, const std::string& path);
ComplexField read_field(const std::string& path);

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

/// PJZ1 zero-set file: "PJZ1 algorithm L delta" then one "x y theta chi"
/// line per zero.
struct ZeroSetFile {
    Algorithm algo = Algorithm::pj;
    double L = 0.0;
    double delta = 0.0;
    std::vector<ChargedZero> zeros;
};

void write_zeros(const ZeroSetFile& zs, const std::string& path);
ZeroSetFile read_zeros(const std::string& path);

/// Shortest decimal that round-trips the double (printf %.17g).
std::string format_double(double v);

}  // namespace pj
