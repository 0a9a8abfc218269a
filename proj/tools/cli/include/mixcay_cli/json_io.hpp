#pragma once

#include <json.hpp>

#include "mixcay/atoms.hpp"
#include "mixcay/census.hpp"
#include "mixcay/chartable.hpp"
#include "mixcay/integrality.hpp"
#include "mixcay/spectra.hpp"

namespace mixcay::cli {

using nlohmann::json;

json complex_json(Complex z);
/// [{"re", "im", "mult"}, ...] in canonical order.
json spectrum_json(const SpectrumMultiset& s);
/// Rows of {"re", "im"} pairs.
json matrix_json(const Eigen::MatrixXcd& m);
json element_list_json(const FiniteGroup& group, const ElementSet& set);
json witness_json(const FiniteGroup& group, const std::optional<SetWitness>& w);
json verdict_json(const FiniteGroup& group, const ConnectionSet& s, const IntegralityVerdict& v);
json chartable_json(const FiniteGroup& group, const CharacterTable& table);
json group_info_json(const FiniteGroup& group);
json atoms_json(const FiniteGroup& group);
json census_json(const CensusReport& report, bool include_timing);

}  // namespace mixcay::cli
