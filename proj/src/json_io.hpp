// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_SRC_JSON_IO_HPP
#define OPSLICER_SRC_JSON_IO_HPP

#include <json.hpp>

#include "opslicer/catalog.hpp"
#include "opslicer/globop.hpp"
#include "opslicer/symop.hpp"
#include "opslicer/wordsolver.hpp"

namespace opslicer::json {

using nlohmann::ordered_json;

ordered_json element(const SymElement& e);
ordered_json presentation(const SymPresentation& p);
ordered_json presentation(const GlobPresentation& p);
ordered_json validation(const std::string& name, const ValidationReport& r);
ordered_json budget(const Budget& b);
ordered_json class_report(const std::string& name, const ClassReport& r, const Budget& b);
ordered_json steps(const std::vector<ProofStep>& steps);

}  // namespace opslicer::json

#endif  // OPSLICER_SRC_JSON_IO_HPP
