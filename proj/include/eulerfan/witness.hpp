#pragma once

#include <string_view>

#include "eulerfan/fan.hpp"

namespace eulerfan {

/// The bundled certified example: an N=3 fan subsolution for
/// contact-discontinuity Riemann data, with exact rational constants.
/// The left-interface and first interior-interface equations hold exactly;
/// the remaining six residuals are below 1e-11; every strict inequality
/// has margin at least 1/3.
const FanConfiguration<Rational>& builtin_witness();

RiemannDatum<Rational> witness_datum();
FanConfiguration<double> witness_config_double();

inline constexpr std::string_view kWitnessName = "appendix-b";

/// Lookup by name ("appendix-b"); throws std::invalid_argument otherwise.
const FanConfiguration<Rational>& builtin_config(std::string_view name);

}  // namespace eulerfan
