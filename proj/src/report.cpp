#include "nilaut/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace nilaut {

namespace {

Json descriptor(const FgAbelian& u) { return u.to_string(); }

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json analysis_json(const FiniteGroup& g, const StructureSummary& s) {
  Json j;
  j["schema"] = kReportSchemaVersion;
  j["kind"] = "analysis";
  j["group"] = g.name();
  j["family"] = g.family();
  j["order"] = s.order;
  j["verification"] = g.verification() == Verification::Full ? "full" : "generator-triples";
  j["nilpotency_class"] = s.nilpotency_class ? Json(*s.nilpotency_class) : Json(nullptr);
  j["center_order"] = s.center_order;
  j["derived_order"] = s.derived_order;
  j["frattini_order"] = s.frattini_order;
  j["center_quotient_order"] = s.center_quotient_order;
  j["derived_equals_commutator_set"] = s.derived_equals_commutator_set;
  j["abelianization"] = descriptor(s.abelianization);
  if (s.triple) {
    j["center_quotient"] = descriptor(s.triple->center_quotient);
    j["derived"] = descriptor(s.triple->derived);
  } else {
    j["center_quotient"] = nullptr;
    j["derived"] = nullptr;
  }
  return j;
}

std::string analysis_text(const FiniteGroup& g, const StructureSummary& s) {
  std::ostringstream os;
  os << "group            " << (g.name().empty() ? "(unnamed)" : g.name()) << "\n"
     << "order            " << s.order << "\n"
     << "class            " << (s.nilpotency_class ? std::to_string(*s.nilpotency_class) : "not nilpotent") << "\n"
     << "|Z(G)|           " << s.center_order << "\n"
     << "|G'|             " << s.derived_order << "\n"
     << "|Phi(G)|         " << s.frattini_order << "\n"
     << "|G/Z(G)|         " << s.center_quotient_order << "\n"
     << "K(G) = G'        " << yes(s.derived_equals_commutator_set) << "\n"
     << "G/G'             " << s.abelianization.to_string() << "\n";
  if (s.triple)
    os << "G/Z(G)           " << s.triple->center_quotient.to_string() << "\n"
       << "G'               " << s.triple->derived.to_string() << "\n";
  return os.str();
}

Json autset_json(const FiniteGroup& g, const AutSet& s) {
  Json j;
  j["schema"] = kReportSchemaVersion;
  j["kind"] = "automorphisms";
  j["group"] = g.name();
  j["set"] = to_string(s.kind());
  j["degree"] = s.degree();
  j["order"] = s.order();
  j["closed"] = s.is_closed();
  const AutStructure st = structure_of(s);
  j["structure"] = st.abelian ? Json(st.abelian->to_string()) : Json(nullptr);
  Json perms = Json::array();
  for (const auto& a : s.members()) perms.push_back(a.images());
  j["permutations"] = std::move(perms);
  return j;
}

std::string autset_text(const FiniteGroup& g, const AutSet& s) {
  std::ostringstream os;
  const AutStructure st = structure_of(s);
  os << to_string(s.kind()) << "(" << g.name() << "): order " << s.order() << ", "
     << (st.abelian ? "abelian " + st.abelian->to_string() : std::string("non-abelian")) << "\n";
  for (const auto& a : s.members()) {
    os << " ";
    for (Index x : a.images()) os << ' ' << x;
    os << "\n";
  }
  return os.str();
}

Json verdict_json(const ClassificationVerdict& v) {
  Json j;
  j["schema"] = kReportSchemaVersion;
  j["kind"] = "classification";
  j["case"] = to_string(v.tag);
  j["predicate"] = v.predicate_holds;
  j["direct"] = v.direct_check_holds;
  j["consistent"] = v.consistent;
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  if (v.isomorphic) j["isomorphic"] = *v.isomorphic;
  if (v.ia_order) j["ia_order"] = *v.ia_order;
  if (v.inn_order) j["inn_order"] = *v.inn_order;
  return j;
}

std::string verdict_text(const ClassificationVerdict& v) {
  std::ostringstream os;
  os << "case        " << to_string(v.tag) << "\n"
     << "predicate   " << (v.predicate_holds ? "true" : "false") << "\n"
     << "direct      " << (v.direct_check_holds ? "true" : "false") << "\n"
     << "consistent  " << (v.consistent ? "true" : "false") << "\n";
  if (v.isomorphic) os << "isomorphic  " << (*v.isomorphic ? "true" : "false") << "\n";
  if (v.ia_order) os << "|IA|        " << *v.ia_order << "\n";
  if (v.inn_order) os << "|Inn|       " << *v.inn_order << "\n";
  if (v.witness) os << "witness     " << *v.witness << "\n";
  return os.str();
}

Json schur_json(const SchurReport& s) {
  Json j;
  j["d"] = s.d;
  j["center_quotient_order"] = s.center_quotient_order;
  j["derived_order"] = s.derived_order;
  j["commutator_set_order"] = s.commutator_set_order;
  j["commutator_set_bound"] = s.commutator_set_bound;
  j["derived_bound"] = s.derived_bound;
  j["chain_holds"] = s.chain_holds;
  j["equality1"] = s.equality1;
  j["equality2"] = s.equality2;
  j["derived_cyclic"] = s.derived_cyclic;
  if (s.derived_is_commutator_set) j["derived_is_commutator_set"] = *s.derived_is_commutator_set;
  if (s.inn_autc_iastar_equal) j["inn_autc_iastar_equal"] = *s.inn_autc_iastar_equal;
  Json tuples = Json::array();
  for (const auto& t : s.tuples) tuples.push_back({{"tuple", t.tuple}, {"product", t.product}});
  j["tuples"] = std::move(tuples);
  j["violations"] = s.violations;
  return j;
}

Json theorem_report_json(const TheoremReport& r) {
  Json j;
  j["schema"] = kReportSchemaVersion;
  j["kind"] = "theorem-report";
  j["name"] = r.name;
  j["ok"] = r.ok();
  Json facts = Json::array();
  for (const auto& f : r.facts)
    facts.push_back({{"fact", f.name}, {"expected", f.expected}, {"actual", f.actual}, {"holds", f.holds}});
  j["facts"] = std::move(facts);
  return j;
}

std::string theorem_report_text(const TheoremReport& r) {
  std::ostringstream os;
  for (const auto& f : r.facts)
    os << (f.holds ? "ok    " : "FAIL  ") << std::left << std::setw(48) << f.name << " " << f.actual
       << (f.holds ? "" : " (expected " + f.expected + ")") << "\n";
  os << r.name << ": " << (r.ok() ? "all facts hold" : "FAILED") << "\n";
  return os.str();
}

Json suite_json(const SuiteReport& r, bool with_timings) {
  Json j;
  j["schema"] = kReportSchemaVersion;
  j["kind"] = "suite";
  j["ok"] = r.ok();
  Json counts;
  for (Status s : {Status::Pass, Status::Fail, Status::Violation, Status::NotApplicable, Status::Error})
    counts[to_string(s)] = r.count(s);
  j["counts"] = std::move(counts);
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json x;
    x["group"] = rec.group;
    x["check"] = rec.check;
    x["status"] = to_string(rec.result.status);
    x["detail"] = rec.result.detail;
    x["values"] = rec.result.values;
    if (with_timings) x["seconds"] = rec.seconds;
    records.push_back(std::move(x));
  }
  j["records"] = std::move(records);
  Json witnesses = Json::object();
  for (const auto& [name, text] : r.witnesses) witnesses[name] = text;
  j["witnesses"] = std::move(witnesses);
  return j;
}

std::string suite_text(const SuiteReport& r) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& rec : r.records) width = std::max(width, rec.group.size());
  os << std::left << std::setw(static_cast<int>(width) + 2) << "group" << std::setw(16) << "check"
     << std::setw(16) << "status" << std::right << std::setw(9) << "ms"
     << "  detail\n";
  for (const auto& rec : r.records) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", rec.seconds * 1000);
    os << std::left << std::setw(static_cast<int>(width) + 2) << rec.group << std::setw(16) << rec.check
       << std::setw(16) << to_string(rec.result.status) << std::right << std::setw(9) << ms << "  "
       << rec.result.detail << "\n";
  }
  os << "\npass " << r.count(Status::Pass) << ", fail " << r.count(Status::Fail) << ", violation "
     << r.count(Status::Violation) << ", not-applicable " << r.count(Status::NotApplicable) << ", error "
     << r.count(Status::Error) << "\n"
     << (r.ok() ? "suite: OK" : "suite: FAILED") << "\n";
  return os.str();
}

}  // namespace nilaut
