// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace pj {

namespace {

std::string located(const std::string& path, int line, int column, const std::string& msg) {
    std::string s = path + ":" + std::to_string(line);
    if (column > 0) s += ":" + std::to_string(column);
    return s + ": " + msg;
}

// strtod with position tracking for column diagnostics.
double parse_double(const std::string& path, int lineno, const std::string& line, const char*& p) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(p, &end);
    if (end == p || errno == ERANGE) {
        throw io_error(path, lineno, static_cast<int>(p - line.c_str()) + 1,
                       "expected a number");
    }
    p = end;
    return v;
}

long parse_long(const std::string& path, int lineno, const std::string& line, const char*& p) {
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(p, &end, 10);
    if (end == p || errno == ERANGE) {
        throw io_error(path, lineno, static_cast<int>(p - line.c_str()) + 1,
                       "expected an integer");
    }
    p = end;
    return v;
}

void expect_line_end(const std::string& path, int lineno, const std::string& line,
                     const char* p) {
    while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
    if (*p != '\0') {
        throw io_error(path, lineno, static_cast<int>(p - line.c_str()) + 1,
                       "trailing characters");
    }
}

std::string next_line(std::istream& in, const std::string& path, int& lineno,
                      const char* what) {
    std::string line;
    if (!std::getline(in, line)) {
        throw io_error(path, lineno + 1, 0, std::string("unexpected end of file, expected ") + what);
    }
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

io_error::io_error(const std::string& path, int line, int column, const std::string& msg)
    : std::runtime_error(located(path, line, column, msg)), line_(line), column_(column) {}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_field(const ComplexField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error(path, 0, 0, "cannot open for writing");
    out << "PJF1\n";
    out << format_double(field.spec().L()) << ' ' << format_double(field.spec().delta()) << ' '
        << field.pad_steps() << '\n';
    out << field.side() << ' ' << field.side() << '\n';
    for (const Complex& v : field.values()) {
        out << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
    }
    if (!out) throw io_error(path, 0, 0, "write failed");
}

ComplexField read_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error(path, 0, 0, "cannot open");
    int lineno = 0;
    const std::string magic = next_line(in, path, lineno, "PJF1 header");
    if (magic != "PJF1") throw io_error(path, lineno, 1, "not a PJF1 file");

    std::string line = next_line(in, path, lineno, "L delta pad_steps");
    const char* p = line.c_str();
    const double L = parse_double(path, lineno, line, p);
    const double delta = parse_double(path, lineno, line, p);
    const long pad = parse_long(path, lineno, line, p);
    expect_line_end(path, lineno, line, p);
    if (pad < 0) throw io_error(path, lineno, 1, "pad_steps must be >= 0");

    line = next_line(in, path, lineno, "nrows ncols");
    p = line.c_str();
    const long nrows = parse_long(path, lineno, line, p);
    const long ncols = parse_long(path, lineno, line, p);
    expect_line_end(path, lineno, line, p);

    GridSpec spec(L, delta);
    const long side = 2 * (spec.half_steps() + pad) + 1;
    if (nrows != side || ncols != side) {
        throw io_error(path, lineno, 1,
                       "dimensions " + std::to_string(nrows) + "x" + std::to_string(ncols) +
                           " do not match L, delta, pad_steps (expected " +
                           std::to_string(side) + ")");
    }
    std::vector<Complex> vals;
    vals.reserve(static_cast<std::size_t>(side) * side);
    for (long i = 0; i < side * side; ++i) {
        line = next_line(in, path, lineno, "re im");
        p = line.c_str();
        const double re = parse_double(path, lineno, line, p);
        const double im = parse_double(path, lineno, line, p);
        expect_line_end(path, lineno, line, p);
        vals.emplace_back(re, im);
    }
    return ComplexField(spec, static_cast<int>(pad), std::move(vals));
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::pj: return "pj";
        case Algorithm::pjc: return "pjc";
        case Algorithm::mgn: return "mgn";
    }
    return "pj";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "pj") return Algorithm::pj;
    if (name == "pjc") return Algorithm::pjc;
    if (name == "mgn") return Algorithm::mgn;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

void write_zeros(const ZeroSetFile& zs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error(path, 0, 0, "cannot open for writing");
    out << "PJZ1 " << algorithm_name(zs.algo) << ' ' << format_double(zs.L) << ' '
        << format_double(zs.delta) << '\n';
    for (const ChargedZero& z : zs.zeros) {
        out << format_double(z.pos.real()) << ' ' << format_double(z.pos.imag()) << ' '
            << z.theta << ' ' << format_double(z.chi) << '\n';
    }
    if (!out) throw io_error(path, 0, 0, "write failed");
}

ZeroSetFile read_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error(path, 0, 0, "cannot open");
    int lineno = 0;
    std::string line = next_line(in, path, lineno, "PJZ1 header");
    std::istringstream head(line);
    std::string magic, algo;
    double L = 0.0, delta = 0.0;
    if (!(head >> magic >> algo >> L >> delta) || magic != "PJZ1") {
        throw io_error(path, lineno, 1, "not a PJZ1 header");
    }
    ZeroSetFile zs;
    try {
        zs.algo = algorithm_from_name(algo);
    } catch (const std::invalid_argument& e) {
        throw io_error(path, lineno, 6, e.what());
    }
    zs.L = L;
    zs.delta = delta;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const char* p = line.c_str();
        const double x = parse_double(path, lineno, line, p);
        const double y = parse_double(path, lineno, line, p);
        const long theta = parse_long(path, lineno, line, p);
        const double chi = parse_double(path, lineno, line, p);
        expect_line_end(path, lineno, line, p);
        ChargedZero z;
        z.pos = {x, y};
        z.gp = {static_cast<int>(std::llround(x / delta)),
                static_cast<int>(std::llround(y / delta))};
        z.theta = static_cast<int>(theta);
        z.chi = chi;
        z.algo = zs.algo;
        zs.zeros.push_back(z);
    }
    return zs;
}

}  // namespace pj
