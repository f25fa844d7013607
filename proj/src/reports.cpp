#include "pin2k/reports.hpp"

#include <sstream>

namespace pin2k {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError("bad integer literal '" + j.get<std::string>() + "'");
    }
  }
  throw SchemaError("expected an integer, got " + j.dump());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw SchemaError("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

std::string pass_tag(bool pass) { return pass ? "[pass]" : "[FAIL]"; }

}  // namespace

// ---- core types ----

Json group_to_json(const GroupSpec& g) {
  if (g.is_odd()) return Json{{"kind", "odd"}, {"p", g.p()}};
  Json orders = Json::array();
  for (long o : g.ambient_orders()) orders.push_back(o);
  return Json{{"kind", "even"}, {"orders", orders}};
}

GroupSpec group_from_json(const Json& j) {
  std::string kind = require(j, "kind").get<std::string>();
  if (kind == "odd") return GroupSpec::odd(require(j, "p").get<int>());
  if (kind != "even") throw SchemaError("group kind must be \"even\" or \"odd\"");
  std::vector<long> orders;
  for (const auto& o : require(j, "orders")) orders.push_back(o.get<long>());
  return GroupSpec::even(std::move(orders));
}

Json apoly_to_json(const APoly& p) {
  Json out = Json::array();
  for (const auto& [chi, c] : p.coeffs()) {
    Json chi_j = Json::array();
    for (long e : chi) chi_j.push_back(e);
    out.push_back(Json{{"chi", chi_j}, {"c", to_string(c)}});
  }
  return out;
}

APoly apoly_from_json(const Json& j, const GroupSpec& g) {
  APoly p(g);
  if (!j.is_array()) throw SchemaError("polynomial must be an array of {chi, c} terms");
  for (const auto& term : j) {
    std::vector<long> chi;
    for (const auto& e : require(term, "chi")) chi.push_back(e.get<long>());
    p.add_coeff(reduce_residues(g, std::move(chi)), rat_from_json(require(term, "c")));
  }
  return p;
}

Json rep_to_json(const RepElement& e) {
  Json h = Json::array();
  for (const auto& [i, p] : e.h_coeffs()) h.push_back(Json{{"i", i}, {"poly", apoly_to_json(p)}});
  return Json{{"group", group_to_json(e.group())},
              {"c0", apoly_to_json(e.c0())},
              {"c0t", apoly_to_json(e.c0_tilde())},
              {"h", h}};
}

RepElement rep_from_json(const Json& j) {
  GroupSpec g = group_from_json(require(j, "group"));
  APoly c0 = apoly_from_json(require(j, "c0"), g);
  APoly c0t = apoly_from_json(require(j, "c0t"), g);
  std::map<int, APoly> h;
  for (const auto& item : require(j, "h"))
    h.emplace(require(item, "i").get<int>(), apoly_from_json(require(item, "poly"), g));
  return RepElement::assemble(g, std::move(c0), std::move(c0t), std::move(h));
}

Json index_to_json(const IndexData& idx) {
  return Json{{"group", group_to_json(idx.group())},
              {"s", apoly_to_json(idx.s())},
              {"t", apoly_to_json(idx.t())}};
}

IndexData index_from_json(const Json& j) {
  GroupSpec g = group_from_json(require(j, "group"));
  return IndexData(g, apoly_from_json(require(j, "s"), g), apoly_from_json(require(j, "t"), g));
}

Json condition_to_json(const Condition& c) {
  return Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

Condition condition_from_json(const Json& j) {
  return {require(j, "name").get<std::string>(), require(j, "pass").get<bool>(),
          require(j, "detail").get<std::string>()};
}

Json conditions_to_json(const std::vector<Condition>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(condition_to_json(c));
  return out;
}

std::vector<Condition> conditions_from_json(const Json& j) {
  std::vector<Condition> out;
  for (const auto& c : j) out.push_back(condition_from_json(c));
  return out;
}

// ---- degree command ----

bool DegreeRunRecord::operator==(const DegreeRunRecord& o) const {
  return index == o.index && h_cutoff == o.h_cutoff && equations == o.equations &&
         outcome == o.outcome && alpha == o.alpha && skipped == o.skipped &&
         certificate == o.certificate &&
         (inequality.has_value() == o.inequality.has_value()) &&
         (!inequality ||
          (inequality->conclusion == o.inequality->conclusion &&
           inequality->required_valuation == o.inequality->required_valuation &&
           inequality->bound_offset == o.inequality->bound_offset &&
           inequality->holds_for_input == o.inequality->holds_for_input &&
           inequality->nondegeneracy == o.inequality->nondegeneracy)) &&
         contradiction == o.contradiction;
}

DegreeRunRecord run_degree_analysis(const IndexData& idx, int h_cutoff) {
  DegreeRunRecord rec{idx, h_cutoff, {}, "", std::nullopt, {}, "", std::nullopt, std::nullopt};
  TraceSystem sys = build_trace_system(idx, h_cutoff);
  for (const auto& eq : sys.equations) {
    EquationRow row;
    row.element = eq.element.str(idx.group());
    row.dim_v = eq.dim_v;
    row.dim_w = eq.dim_w;
    switch (eq.kind) {
      case TraceEquation::Kind::ZeroTrace: row.kind = "zero-trace"; break;
      case TraceEquation::Kind::LambdaTrace:
        row.kind = "lambda-trace";
        row.value = eq.value.str();
        break;
      case TraceEquation::Kind::Skipped:
        row.kind = "skipped";
        row.reason = eq.skip_reason;
        break;
    }
    rec.equations.push_back(std::move(row));
  }
  DegreeSolution sol = solve_degree(sys);
  switch (sol.outcome) {
    case DegreeSolution::Outcome::Unique:
      rec.outcome = "unique";
      rec.alpha = sol.alpha;
      rec.inequality = conclude_bound(sol, idx);
      break;
    case DegreeSolution::Outcome::Underdetermined:
      rec.outcome = "underdetermined";
      rec.skipped = sol.skipped;
      break;
    case DegreeSolution::Outcome::Inconsistent:
      rec.outcome = "inconsistent";
      rec.certificate = sol.certificate;
      break;
  }
  // The vanishing-quotient contradiction: when the trivial t-coefficient is
  // zero with k > 0, certify non-polynomiality of the trace at phi*nu.
  if (idx.group().is_cyclic() && idx.group().num_factors() > 0 && idx.k() > 0 && idx.m() > 0 &&
      idx.trivial_t_coeff() == 0) {
    ContradictionReport c = verify_theorem_c(idx);
    rec.contradiction =
        ContradictionRecord{c.certified, c.element, c.trace.str(), c.offending_denominator};
  }
  return rec;
}

namespace {

Json equation_row_to_json(const EquationRow& r) {
  Json j{{"element", r.element}, {"kind", r.kind},
         {"dim_v", to_string(r.dim_v)}, {"dim_w", to_string(r.dim_w)}};
  if (!r.value.empty()) j["value"] = r.value;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

EquationRow equation_row_from_json(const Json& j) {
  EquationRow r;
  r.element = require(j, "element").get<std::string>();
  r.kind = require(j, "kind").get<std::string>();
  r.dim_v = int_from_json(require(j, "dim_v"));
  r.dim_w = int_from_json(require(j, "dim_w"));
  if (j.contains("value")) r.value = j.at("value").get<std::string>();
  if (j.contains("reason")) r.reason = j.at("reason").get<std::string>();
  return r;
}

Json inequality_to_json(const InequalityReport& r) {
  return Json{{"required_valuation", r.required_valuation},
              {"bound_offset", r.bound_offset},
              {"conclusion", r.conclusion},
              {"holds_for_input", r.holds_for_input},
              {"nondegeneracy", conditions_to_json(r.nondegeneracy)}};
}

InequalityReport inequality_from_json(const Json& j) {
  InequalityReport r;
  r.required_valuation = require(j, "required_valuation").get<long>();
  r.bound_offset = require(j, "bound_offset").get<long>();
  r.conclusion = require(j, "conclusion").get<std::string>();
  r.holds_for_input = require(j, "holds_for_input").get<bool>();
  r.nondegeneracy = conditions_from_json(require(j, "nondegeneracy"));
  return r;
}

}  // namespace

Json degree_record_to_json(const DegreeRunRecord& r) {
  Json eqs = Json::array();
  for (const auto& e : r.equations) eqs.push_back(equation_row_to_json(e));
  Json j{{"index", index_to_json(r.index)},
         {"h_cutoff", r.h_cutoff},
         {"equations", eqs},
         {"outcome", r.outcome}};
  if (r.alpha) {
    j["alpha"] = rep_to_json(*r.alpha);
    j["alpha_display"] = r.alpha->str();
  }
  if (!r.skipped.empty()) {
    Json sk = Json::array();
    for (const auto& s : r.skipped) sk.push_back(Json{{"element", s.element}, {"reason", s.reason}});
    j["skipped"] = sk;
  }
  if (!r.certificate.empty()) j["certificate"] = r.certificate;
  if (r.inequality) j["inequality"] = inequality_to_json(*r.inequality);
  if (r.contradiction)
    j["contradiction"] = Json{{"certified", r.contradiction->certified},
                              {"element", r.contradiction->element},
                              {"trace", r.contradiction->trace},
                              {"offending_denominator", r.contradiction->offending_denominator}};
  return j;
}

DegreeRunRecord degree_record_from_json(const Json& j) {
  DegreeRunRecord r{index_from_json(require(j, "index")),
                    require(j, "h_cutoff").get<int>(),
                    {},
                    require(j, "outcome").get<std::string>(),
                    std::nullopt,
                    {},
                    "",
                    std::nullopt,
                    std::nullopt};
  for (const auto& e : require(j, "equations")) r.equations.push_back(equation_row_from_json(e));
  if (j.contains("alpha")) r.alpha = rep_from_json(j.at("alpha"));
  if (j.contains("skipped"))
    for (const auto& s : j.at("skipped"))
      r.skipped.push_back({require(s, "element").get<std::string>(),
                           require(s, "reason").get<std::string>()});
  if (j.contains("certificate")) r.certificate = j.at("certificate").get<std::string>();
  if (j.contains("inequality")) r.inequality = inequality_from_json(j.at("inequality"));
  if (j.contains("contradiction")) {
    const Json& c = j.at("contradiction");
    r.contradiction = ContradictionRecord{require(c, "certified").get<bool>(),
                                          require(c, "element").get<std::string>(),
                                          require(c, "trace").get<std::string>(),
                                          require(c, "offending_denominator").get<std::string>()};
  }
  return r;
}

std::string render_degree_record(const DegreeRunRecord& r) {
  std::ostringstream out;
  const IndexData& idx = r.index;
  out << "degree analysis over " << idx.group().str() << ": k = " << to_string(idx.k())
      << ", m = " << to_string(idx.m()) << ", h-cutoff " << r.h_cutoff << "\n";
  out << "equations:\n";
  for (const auto& e : r.equations) {
    out << "  " << e.element << ": " << e.kind << ", fixed dims (" << to_string(e.dim_v) << ", "
        << to_string(e.dim_w) << ")";
    if (!e.value.empty()) out << ", value " << e.value;
    if (!e.reason.empty()) out << " (" << e.reason << ")";
    out << "\n";
  }
  out << "outcome: " << r.outcome << "\n";
  if (r.alpha) out << "alpha = " << r.alpha->str() << "\n";
  for (const auto& s : r.skipped)
    out << "  unpinned by skipped equation at " << s.element << ": " << s.reason << "\n";
  if (!r.certificate.empty()) out << "certificate: " << r.certificate << "\n";
  if (r.inequality) {
    const auto& q = *r.inequality;
    out << "inequality: " << q.conclusion << "  [" << (q.holds_for_input ? "holds" : "VIOLATED")
        << " for this input; 2-adic valuation of alpha = " << q.required_valuation << "]\n";
    out << "non-degeneracy conditions:\n";
    for (const auto& c : q.nondegeneracy)
      out << "  " << pass_tag(c.pass) << " " << c.name << "  (" << c.detail << ")\n";
  }
  if (r.contradiction) {
    const auto& c = *r.contradiction;
    out << "vanishing-quotient contradiction at " << c.element << ": "
        << (c.certified ? "certified" : "NOT certified")
        << "; tr = " << c.trace;
    if (c.certified) out << "; non-unit denominator " << c.offending_denominator;
    out << "\n";
  }
  return out.str();
}

// ---- bound command ----

bool BoundRunRecord::operator==(const BoundRunRecord& o) const {
  return manifold == o.manifold && cls == o.cls && p == o.p && report == o.report &&
         failed_hypotheses == o.failed_hypotheses && cover == o.cover &&
         input_genus == o.input_genus;
}

BoundRunRecord run_bound_analysis(const ManifoldSpec& M, const SurfaceClass& cls, int p,
                                  const std::optional<Int>& genus) {
  BoundRunRecord rec{M, cls, p, std::nullopt, {}, std::nullopt, genus};
  try {
    rec.report = genus_bound(M, cls, p);
  } catch (const HypothesisFailed& e) {
    rec.failed_hypotheses = e.table();
    return rec;
  }
  if (genus) rec.cover = cover_invariants(M, cls, *genus, p);
  return rec;
}

Json form_to_json(const IntersectionForm& f) {
  Json out = Json::array();
  for (const auto& b : f.blocks()) {
    if (const auto* d = std::get_if<DiagBlock>(&b)) {
      Json entries = Json::array();
      for (int e : d->entries) entries.push_back(e);
      out.push_back(Json{{"diag", entries}});
    } else {
      out.push_back(Json{{"hyperbolic", std::get<HypBlock>(b).count}});
    }
  }
  return out;
}

IntersectionForm form_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("form must be an array of blocks");
  std::vector<FormBlock> blocks;
  for (const auto& b : j) {
    if (b.contains("diag")) {
      DiagBlock d;
      for (const auto& e : b.at("diag")) d.entries.push_back(e.get<int>());
      blocks.push_back(d);
    } else if (b.contains("hyperbolic")) {
      blocks.push_back(HypBlock{b.at("hyperbolic").get<int>()});
    } else {
      throw SchemaError("form block must be {\"diag\": [...]} or {\"hyperbolic\": n}");
    }
  }
  return IntersectionForm(std::move(blocks));
}

namespace {

Json genus_report_to_json(const GenusBoundReport& r) {
  Json excluded = Json::array();
  for (const Int& e : r.excluded_genera) excluded.push_back(to_string(e));
  return Json{{"p", r.p},
              {"furuta_bound", to_string(r.furuta_bound)},
              {"refined_bound", to_string(r.refined_bound)},
              {"excluded_genera", excluded},
              {"hypotheses", conditions_to_json(r.hypotheses)},
              {"effective_min_genus", to_string(r.effective_min_genus)}};
}

GenusBoundReport genus_report_from_json(const Json& j) {
  GenusBoundReport r;
  r.p = require(j, "p").get<int>();
  r.furuta_bound = rat_from_json(require(j, "furuta_bound"));
  r.refined_bound = rat_from_json(require(j, "refined_bound"));
  for (const auto& e : require(j, "excluded_genera")) r.excluded_genera.insert(int_from_json(e));
  r.hypotheses = conditions_from_json(require(j, "hypotheses"));
  r.effective_min_genus = int_from_json(require(j, "effective_min_genus"));
  return r;
}

Json cover_to_json(const CoverInvariants& c) {
  Json m = Json::array();
  for (const Int& v : c.m) m.push_back(to_string(v));
  return Json{{"p", c.p}, {"k", to_string(c.k)}, {"m", m}};
}

CoverInvariants cover_from_json(const Json& j) {
  CoverInvariants c;
  c.p = require(j, "p").get<int>();
  c.k = int_from_json(require(j, "k"));
  for (const auto& v : require(j, "m")) c.m.push_back(int_from_json(v));
  return c;
}

}  // namespace

Json bound_record_to_json(const BoundRunRecord& r) {
  Json cls = Json::array();
  for (const Int& c : r.cls.coords) cls.push_back(to_string(c));
  Json j{{"manifold", Json{{"name", r.manifold.name}, {"form", form_to_json(r.manifold.form)}}},
         {"class", cls},
         {"p", r.p}};
  if (r.report) j["report"] = genus_report_to_json(*r.report);
  if (!r.failed_hypotheses.empty()) j["failed_hypotheses"] = conditions_to_json(r.failed_hypotheses);
  if (r.cover) j["cover"] = cover_to_json(*r.cover);
  if (r.input_genus) j["genus"] = to_string(*r.input_genus);
  return j;
}

BoundRunRecord bound_record_from_json(const Json& j) {
  const Json& mj = require(j, "manifold");
  ManifoldSpec M{require(mj, "name").get<std::string>(), form_from_json(require(mj, "form"))};
  SurfaceClass cls;
  for (const auto& c : require(j, "class")) cls.coords.push_back(int_from_json(c));
  BoundRunRecord r{std::move(M), std::move(cls), require(j, "p").get<int>(),
                   std::nullopt, {}, std::nullopt, std::nullopt};
  if (j.contains("report")) r.report = genus_report_from_json(j.at("report"));
  if (j.contains("failed_hypotheses"))
    r.failed_hypotheses = conditions_from_json(j.at("failed_hypotheses"));
  if (j.contains("cover")) r.cover = cover_from_json(j.at("cover"));
  if (j.contains("genus")) r.input_genus = int_from_json(j.at("genus"));
  return r;
}

std::string render_bound_record(const BoundRunRecord& r) {
  std::ostringstream out;
  out << "genus bound for " << r.manifold.name << " (" << r.manifold.form.str() << "), class (";
  for (size_t i = 0; i < r.cls.coords.size(); ++i)
    out << (i ? "," : "") << to_string(r.cls.coords[i]);
  out << "), p = " << r.p << "\n";
  out << "[Sigma]^2 = " << to_string(r.cls.square(r.manifold.form))
      << ", sigma(M) = " << r.manifold.signature() << ", b2(M) = " << r.manifold.b2()
      << ", b2+(M) = " << r.manifold.b2plus() << "\n";
  const auto& hyps = r.report ? r.report->hypotheses : r.failed_hypotheses;
  out << "hypotheses:\n";
  for (const auto& h : hyps)
    out << "  " << pass_tag(h.pass) << " " << h.name << "  (" << h.detail << ")\n";
  if (!r.report) {
    out << "hypothesis failure: no bound computed\n";
    return out.str();
  }
  const auto& rep = *r.report;
  out << "furuta bound  >= " << to_string(rep.furuta_bound) << "\n";
  out << "refined bound >= " << to_string(rep.refined_bound) << "\n";
  out << "excluded genera: ";
  if (rep.excluded_genera.empty()) {
    out << "none";
  } else {
    bool first = true;
    for (const Int& e : rep.excluded_genera) {
      out << (first ? "" : ", ") << to_string(e);
      first = false;
    }
  }
  out << "\n";
  out << "effective minimal genus = " << to_string(rep.effective_min_genus) << "\n";
  if (r.cover) {
    out << "cover invariants at genus " << to_string(*r.input_genus)
        << ": k = " << to_string(r.cover->k);
    for (size_t i = 0; i < r.cover->m.size(); ++i)
      out << ", m_" << i << " = " << to_string(r.cover->m[i]);
    out << "\n";
  }
  return out.str();
}

BoundInput parse_bound_input(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("input document must be a JSON object");
  if (int_from_json(require(doc, "version")) != 1) throw SchemaError("unsupported document version");
  BoundInput in;
  in.manifold.name = require(doc, "name").get<std::string>();
  in.manifold.form = form_from_json(require(doc, "form"));
  for (const auto& c : require(doc, "class")) in.cls.coords.push_back(int_from_json(c));
  in.p = require(doc, "p").get<int>();
  if (in.p < 1) throw SchemaError("p must be >= 1");
  if (doc.contains("genus")) in.genus = int_from_json(doc.at("genus"));
  if (in.cls.coords.size() != static_cast<size_t>(in.manifold.form.rank()))
    throw SchemaError("class length does not match form rank");
  return in;
}

DegreeInput parse_degree_input(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("input document must be a JSON object");
  if (int_from_json(require(doc, "version")) != 1) throw SchemaError("unsupported document version");
  GroupSpec g = group_from_json(require(doc, "group"));
  const Json& sj = require(doc, "s");
  const Json& tj = require(doc, "t");
  DegreeInput in{IndexData::furuta(0, 0), 8};
  auto is_plain_array = [](const Json& a) {
    return a.is_array() && (a.empty() || !a.front().is_object());
  };
  if (g.is_cyclic() && is_plain_array(sj) && is_plain_array(tj)) {
    // Paper-style coefficient vectors (s_i, t_i), i = 1..2^p.
    std::vector<Int> s, t;
    for (const auto& v : sj) s.push_back(int_from_json(v));
    for (const auto& v : tj) t.push_back(int_from_json(v));
    if (g.is_odd()) {
      in.index = IndexData::odd_type(g.p(), s, t);
    } else if (g.num_factors() == 0) {
      if (s.size() != 1 || t.size() != 1)
        throw SchemaError("trivial group: s and t must each have one entry");
      in.index = IndexData::even_cyclic(0, s, t);
    } else {
      long order = g.ambient_orders()[0];
      int p = 0;
      while ((1L << p) < order) ++p;
      in.index = IndexData::even_cyclic(p, s, t);
    }
  } else {
    in.index = IndexData(g, apoly_from_json(sj, g), apoly_from_json(tj, g));
  }
  if (doc.contains("h_cutoff")) {
    in.h_cutoff = doc.at("h_cutoff").get<int>();
    if (in.h_cutoff < 1) throw SchemaError("h_cutoff must be >= 1");
  }
  return in;
}

// ---- k3 command ----

Json qk3_to_json(const QK3Classification& c) {
  Json j{{"type", c.type == SpinActionType::Even ? "even" : "odd"},
         {"b2plus_quotient", to_string(c.b2plus_quotient)},
         {"derivation", c.derivation}};
  if (c.fixed_points) j["fixed_points"] = to_string(*c.fixed_points);
  if (c.b2minus_quotient) j["b2minus_quotient"] = to_string(*c.b2minus_quotient);
  return j;
}

QK3Classification qk3_from_json(const Json& j) {
  QK3Classification c;
  c.type = require(j, "type").get<std::string>() == "even" ? SpinActionType::Even
                                                           : SpinActionType::Odd;
  c.b2plus_quotient = int_from_json(require(j, "b2plus_quotient"));
  for (const auto& d : require(j, "derivation")) c.derivation.push_back(d.get<std::string>());
  if (j.contains("fixed_points")) c.fixed_points = int_from_json(j.at("fixed_points"));
  if (j.contains("b2minus_quotient")) c.b2minus_quotient = int_from_json(j.at("b2minus_quotient"));
  return c;
}

std::string render_qk3(const QK3Classification& c) {
  std::ostringstream out;
  out << "spin involution on a rational cohomology K3, "
      << (c.type == SpinActionType::Even ? "even" : "odd") << " type\n";
  if (c.fixed_points) out << "fixed points: " << to_string(*c.fixed_points) << " isolated\n";
  out << "b2+(X/sigma) = " << to_string(c.b2plus_quotient) << "\n";
  if (c.b2minus_quotient) out << "b2-(X/sigma) = " << to_string(*c.b2minus_quotient) << "\n";
  out << "derivation:\n";
  for (const auto& d : c.derivation) out << "  - " << d << "\n";
  return out.str();
}

Json k3_construction_to_json(const K3ConstructionCheck& c) {
  return Json{{"chi_cover", to_string(c.chi_cover)},
              {"sigma_cover", to_string(c.sigma_cover)},
              {"stated_sigma_cover", to_string(c.stated_sigma_cover)},
              {"sign_discrepancy", c.sign_discrepancy},
              {"chi_final", to_string(c.chi_final)},
              {"sigma_final", to_string(c.sigma_final)},
              {"b2_final", to_string(c.b2_final)},
              {"is_rational_k3", c.is_rational_k3},
              {"notes", c.notes}};
}

K3ConstructionCheck k3_construction_from_json(const Json& j) {
  K3ConstructionCheck c;
  c.chi_cover = int_from_json(require(j, "chi_cover"));
  c.sigma_cover = int_from_json(require(j, "sigma_cover"));
  c.stated_sigma_cover = int_from_json(require(j, "stated_sigma_cover"));
  c.sign_discrepancy = require(j, "sign_discrepancy").get<bool>();
  c.chi_final = int_from_json(require(j, "chi_final"));
  c.sigma_final = int_from_json(require(j, "sigma_final"));
  c.b2_final = int_from_json(require(j, "b2_final"));
  c.is_rational_k3 = require(j, "is_rational_k3").get<bool>();
  for (const auto& n : require(j, "notes")) c.notes.push_back(n.get<std::string>());
  return c;
}

std::string render_k3_construction(const K3ConstructionCheck& c) {
  std::ostringstream out;
  out << "double branched cover construction of the even K3 involution\n";
  out << "chi(X~) = " << to_string(c.chi_cover) << ", sigma(X~) = " << to_string(c.sigma_cover)
      << " (stated: " << to_string(c.stated_sigma_cover) << ", "
      << (c.sign_discrepancy ? "SIGN DISCREPANCY FLAGGED" : "consistent") << ")\n";
  out << "after eight blow-downs: chi(X) = " << to_string(c.chi_final)
      << ", sigma(X) = " << to_string(c.sigma_final) << ", b2 = " << to_string(c.b2_final)
      << (c.is_rational_k3 ? " -> rational cohomology K3" : " -> NOT a rational K3") << "\n";
  for (const auto& n : c.notes) out << "  - " << n << "\n";
  return out.str();
}

// ---- ring command ----

bool RingRunRecord::operator==(const RingRunRecord& o) const {
  return group == o.group && expression == o.expression && normal_form == o.normal_form &&
         character_at_j == o.character_at_j && character_at_phi == o.character_at_phi &&
         characters_j_family == o.characters_j_family;
}

RingRunRecord run_ring_analysis(const std::string& expression, const GroupSpec& g) {
  RingRunRecord rec;
  rec.group = g;
  rec.expression = expression;
  rec.normal_form = parse_ring_expression(expression, g);
  rec.character_at_j = rec.normal_form.character(GroupElement::j(g)).str();
  rec.character_at_phi = rec.normal_form.character(GroupElement::torus(g)).str();
  for (const auto& a : g.element_representatives()) {
    GroupElement el = GroupElement::j(g, a);
    rec.characters_j_family.emplace_back(el.str(g), rec.normal_form.character(el).str());
  }
  return rec;
}

Json ring_record_to_json(const RingRunRecord& r) {
  Json family = Json::array();
  for (const auto& [el, val] : r.characters_j_family)
    family.push_back(Json{{"element", el}, {"value", val}});
  return Json{{"group", group_to_json(r.group)},
              {"expression", r.expression},
              {"normal_form", rep_to_json(r.normal_form)},
              {"display", r.normal_form.str()},
              {"character_at_J", r.character_at_j},
              {"character_at_phi", r.character_at_phi},
              {"characters_J_family", family}};
}

RingRunRecord ring_record_from_json(const Json& j) {
  RingRunRecord r;
  r.group = group_from_json(require(j, "group"));
  r.expression = require(j, "expression").get<std::string>();
  r.normal_form = rep_from_json(require(j, "normal_form"));
  r.character_at_j = require(j, "character_at_J").get<std::string>();
  r.character_at_phi = require(j, "character_at_phi").get<std::string>();
  for (const auto& f : require(j, "characters_J_family"))
    r.characters_j_family.emplace_back(require(f, "element").get<std::string>(),
                                       require(f, "value").get<std::string>());
  return r;
}

std::string render_ring_record(const RingRunRecord& r) {
  std::ostringstream out;
  out << "ring evaluation over " << r.group.str() << "\n";
  out << "input: " << r.expression << "\n";
  out << "normal form: " << r.normal_form.str() << "\n";
  out << "tr at phi: " << r.character_at_phi << "\n";
  out << "tr at J: " << r.character_at_j << "\n";
  for (const auto& [el, val] : r.characters_j_family)
    out << "tr at " << el << ": " << val << "\n";
  return out.str();
}

// ---- envelope ----

Json run_report_to_json(const RunReport& r) {
  return Json{{"version", r.version},
              {"command", r.command},
              {"inputs", r.inputs},
              {"result", r.result},
              {"diagnostics", conditions_to_json(r.diagnostics)}};
}

RunReport run_report_from_json(const Json& j) {
  RunReport r;
  r.version = int_from_json(require(j, "version")).convert_to<int>();
  r.command = require(j, "command").get<std::string>();
  r.inputs = require(j, "inputs");
  r.result = require(j, "result");
  r.diagnostics = conditions_from_json(require(j, "diagnostics"));
  return r;
}

}  // namespace pin2k
