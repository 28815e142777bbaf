#pragma once

#include <cstdint>
#include <string>

#include "fmodel/types.hpp"

namespace fmodel {

enum class OperatorFormat { json, csv };

namespace io {

/// Format from the file extension; anything but ".csv" is read as JSON.
OperatorFormat format_for(const std::string& path);

ComplexMatrix load_operator(const std::string& path);
ComplexMatrix load_operator(const std::string& path, OperatorFormat format);
ComplexMatrix parse_operator_json(const std::string& text);
ComplexMatrix parse_operator_csv(const std::string& text);

std::string operator_to_json(const ComplexMatrix& m);
void save_operator(const ComplexMatrix& m, const std::string& path);

/// Shortest decimal that round-trips, at most 17 significant digits.
std::string format_double(double x);

}  // namespace io

enum class FixtureKind { zero, jordan, scaled_unitary, diagonal };

namespace fixtures {

FixtureKind parse_kind(const std::string& name);
ComplexMatrix generate(FixtureKind kind, Index dim, std::uint64_t seed = 0, double r = 0.9);

}  // namespace fixtures
}  // namespace fmodel
