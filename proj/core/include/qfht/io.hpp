#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qfht/bargmann.hpp"
#include "qfht/hilbert.hpp"

namespace qfht {

/// Signal CSV: a "# qfht-signal alpha=... m=..." header comment, then one
/// row "x, w, qw, qx, qy, qz" per node, every number as decimal with 17
/// significant digits (round-trip exact, byte-deterministic).
void write_signal(std::ostream& out, const RadialSignal& f);
void write_signal_file(const std::string& path, const RadialSignal& f);

RadialSignal read_signal(std::istream& in);
RadialSignal read_signal_file(const std::string& path);

/// Coefficient JSON: a plain array of [w, x, y, z] quadruples.
void write_coeffs_file(const std::string& path, const std::vector<Quaternion>& coeffs);
std::vector<Quaternion> read_coeffs_file(const std::string& path);

/// One formatted value, 17 significant digits.
std::string format_g17(double v);

} // namespace qfht
