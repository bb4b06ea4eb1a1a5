#pragma once

#include <string>

#include "nilcohom/form.hpp"

namespace nilcohom {

struct Model;
struct ClassificationReport;
struct VerdictReport;
struct MasseyResult;
struct PairingReport;
struct DdbarReport;
class GradedCohomology;

/// Monomial rendering: real basis `e13` (or `e(1,10,13)` past index 9),
/// bigraded `w12`, `W12`, `w1^W1` (unbarred run, then barred run). Degree
/// zero renders as `1`.
std::string format_mono(Mono s, BasisKind kind, int n);

/// `<scalar> <mono>` terms joined by ` + `, in monomial order; `0` if empty.
std::string format_form(const Form& f);

// Each render_* pair produces the human output and the machine `--json`
// output of one CLI subcommand. JSON field names mirror the report structs;
// identical inputs yield byte-identical JSON.

std::string render_check_text(const Model& model, const ClassificationReport& cls);
std::string render_check_json(const Model& model, const ClassificationReport& cls);

std::string render_cohomology_text(const Model& model, bool derham, bool dolbeault);
std::string render_cohomology_json(const Model& model, bool derham, bool dolbeault);

std::string render_verdicts_text(const Model& model, const VerdictReport& verdicts);
std::string render_verdicts_json(const Model& model, const VerdictReport& verdicts);

std::string render_massey_text(const Model& model, const std::string& complex_name,
                               int max_degree, const std::vector<MasseyResult>& hits);
std::string render_massey_json(const Model& model, const std::string& complex_name,
                               int max_degree, const std::vector<MasseyResult>& hits);

std::string render_pairing_text(const Model& model);
std::string render_pairing_json(const Model& model);

std::string render_ddbar_text(const Model& model, const DdbarReport& report);
std::string render_ddbar_json(const Model& model, const DdbarReport& report);

}  // namespace nilcohom
