#pragma once

#include <string>

#include "hpfold/hp_model.hpp"

namespace hpfold::render {

/// SVG drawing of a conformation: one circle per residue (H red, P green),
/// one solid backbone line per move, one dashed line per H-H contact.
/// Axial coordinates map to Cartesian as x = u + v/2, y = v*sqrt(3)/2.
std::string to_svg(const HpSequence& seq, const Conformation& conf);

/// Coarse text drawing: residue letters on a half-column grid with a legend
/// listing rank positions.
std::string to_ascii(const HpSequence& seq, const Conformation& conf);

} // namespace hpfold::render
