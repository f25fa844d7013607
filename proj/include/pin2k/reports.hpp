#pragma once

#include <optional>

#include <json.hpp>

#include "pin2k/cover.hpp"
#include "pin2k/degree.hpp"
#include "pin2k/dense_solver.hpp"
#include "pin2k/k3.hpp"
#include "pin2k/ring_expr.hpp"

namespace pin2k {

using Json = nlohmann::json;

// ---- core type serialization (exact: rationals travel as strings) ----

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

Json apoly_to_json(const APoly& p);
APoly apoly_from_json(const Json& j, const GroupSpec& g);

Json rep_to_json(const RepElement& e);
RepElement rep_from_json(const Json& j);

Json index_to_json(const IndexData& idx);
IndexData index_from_json(const Json& j);

Json condition_to_json(const Condition& c);
Condition condition_from_json(const Json& j);
Json conditions_to_json(const std::vector<Condition>& cs);
std::vector<Condition> conditions_from_json(const Json& j);

// ---- run records: one per CLI command ----

struct EquationRow {
  std::string element;
  std::string kind;  // "zero-trace" | "lambda-trace" | "skipped"
  Int dim_v, dim_w;
  std::string value;   // lambda-trace only
  std::string reason;  // skipped only
  bool operator==(const EquationRow& o) const {
    return element == o.element && kind == o.kind && dim_v == o.dim_v && dim_w == o.dim_w &&
           value == o.value && reason == o.reason;
  }
};

struct ContradictionRecord {
  bool certified = false;
  std::string element;
  std::string trace;
  std::string offending_denominator;
  bool operator==(const ContradictionRecord& o) const {
    return certified == o.certified && element == o.element && trace == o.trace &&
           offending_denominator == o.offending_denominator;
  }
};

struct DegreeRunRecord {
  IndexData index;
  int h_cutoff = 8;
  std::vector<EquationRow> equations;
  std::string outcome;  // "unique" | "underdetermined" | "inconsistent"
  std::optional<RepElement> alpha;
  std::vector<SkippedEquation> skipped;
  std::string certificate;
  std::optional<InequalityReport> inequality;
  std::optional<ContradictionRecord> contradiction;

  bool operator==(const DegreeRunRecord& o) const;
};

DegreeRunRecord run_degree_analysis(const IndexData& idx, int h_cutoff = 8);
Json degree_record_to_json(const DegreeRunRecord& r);
DegreeRunRecord degree_record_from_json(const Json& j);
std::string render_degree_record(const DegreeRunRecord& r);

struct BoundRunRecord {
  ManifoldSpec manifold;
  SurfaceClass cls;
  int p = 1;
  std::optional<GenusBoundReport> report;          // absent on hypothesis failure
  std::vector<Condition> failed_hypotheses;        // populated on failure
  std::optional<CoverInvariants> cover;            // when an input genus was supplied
  std::optional<Int> input_genus;

  bool operator==(const BoundRunRecord& o) const;
};

BoundRunRecord run_bound_analysis(const ManifoldSpec& M, const SurfaceClass& cls, int p,
                                  const std::optional<Int>& genus);
Json bound_record_to_json(const BoundRunRecord& r);
BoundRunRecord bound_record_from_json(const Json& j);
std::string render_bound_record(const BoundRunRecord& r);

Json form_to_json(const IntersectionForm& f);
IntersectionForm form_from_json(const Json& j);

Json qk3_to_json(const QK3Classification& c);
QK3Classification qk3_from_json(const Json& j);
std::string render_qk3(const QK3Classification& c);

Json k3_construction_to_json(const K3ConstructionCheck& c);
K3ConstructionCheck k3_construction_from_json(const Json& j);
std::string render_k3_construction(const K3ConstructionCheck& c);

struct RingRunRecord {
  GroupSpec group = GroupSpec::trivial();
  std::string expression;
  RepElement normal_form;
  std::string character_at_j;
  std::string character_at_phi;
  std::vector<std::pair<std::string, std::string>> characters_j_family;

  bool operator==(const RingRunRecord& o) const;
};

RingRunRecord run_ring_analysis(const std::string& expression, const GroupSpec& g);
Json ring_record_to_json(const RingRunRecord& r);
RingRunRecord ring_record_from_json(const Json& j);
std::string render_ring_record(const RingRunRecord& r);

// ---- input documents ----

struct BoundInput {
  ManifoldSpec manifold;
  SurfaceClass cls;
  int p = 1;
  std::optional<Int> genus;
};

// Parses the versioned manifold/class document (throws SchemaError).
BoundInput parse_bound_input(const Json& doc);

struct DegreeInput {
  IndexData index;
  int h_cutoff = 8;
};

DegreeInput parse_degree_input(const Json& doc);

// ---- the envelope every command emits ----

struct RunReport {
  int version = 1;
  std::string command;
  Json inputs;
  Json result;
  std::vector<Condition> diagnostics;

  bool operator==(const RunReport& o) const {
    return version == o.version && command == o.command && inputs == o.inputs &&
           result == o.result && diagnostics == o.diagnostics;
  }
};

Json run_report_to_json(const RunReport& r);
RunReport run_report_from_json(const Json& j);

}  // namespace pin2k
