#ifndef LFSTAB_REPORT_HPP
#define LFSTAB_REPORT_HPP

#include <string>

#include "lfstab/recognize.hpp"
#include "lfstab/verify.hpp"

namespace lfstab {

// JSON documents carry a "schema" key; see docs/report_schema.md. None of
// them contains timings, so equal inputs give byte-identical output.

std::string to_json(const SweepReport& r);
std::string to_json(const std::vector<SweepReport>& reports);
std::string to_json(const Verdict& v, const LinearForest& f, const Graph& g);
std::string to_json(const TuranResult& r);
std::string to_json(const SharpnessReport& r);
std::string to_json(const FamilyMatch& m, const Graph& g);

std::string to_text(const SweepReport& r);
std::string to_text(const Verdict& v, const LinearForest& f, const Graph& g);
std::string to_text(const TuranResult& r);
std::string to_text(const SharpnessReport& r);
std::string to_text(const FamilyMatch& m);

}  // namespace lfstab

#endif
