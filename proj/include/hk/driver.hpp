#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hk/dim_one.hpp"
#include "hk/format.hpp"
#include "hk/search.hpp"
#include "hk/session.hpp"
#include "hk/verifier.hpp"

namespace hk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hk-report/1";

struct RunOptions {
  std::uint64_t seed = 0;
  int n_max = 40;
  int guard = 2;
  int trials = 8;

  FitOptions fit() const { return FitOptions{guard, n_max}; }
  VerifyOptions verify() const {
    VerifyOptions v;
    v.fit = fit();
    v.seed = seed;
    v.trials = trials;
    return v;
  }
};

inline Json to_json(const std::vector<Polynomial>& polys) {
  Json a = Json::array();
  for (const auto& p : polys) a.push_back(p.to_string());
  return a;
}

inline Json to_json(const WitnessValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

inline Json to_json(const TheoremReport& r) {
  Json j;
  j["statement_id"] = r.statement_id;
  j["statement"] = r.statement;
  Json hs = Json::array();
  for (const auto& h : r.hypotheses) hs.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
  j["hypotheses"] = hs;
  j["conclusion"] = to_string(r.conclusion);
  j["red_alert"] = r.red_alert();
  Json w = Json::object();
  for (const auto& [k, v] : r.witness) w[k] = to_json(v);
  j["witness"] = w;
  j["seed"] = r.seed;
  j["reproduction"] = r.reproduction;
  return j;
}

inline Json postulation_json(const HilbertData& f) {
  return f.postulation ? Json(*f.postulation) : Json(nullptr);
}

/// Executes session commands against one ring, reusing fits across commands.
class SessionRunner {
 public:
  SessionRunner(Session session, RunOptions opt) : s_(std::move(session)), opt_(opt), R_(session_ring(s_)) {}

  const QuotientRing& ring() const { return R_; }

  Json run(const Command& c) {
    Json j;
    j["command"] = c.name;
    j["line"] = c.line;
    if (c.name == "coeffs") coeffs(j, c.args.at(0));
    else if (c.name == "postulation") postulation(j, c.args.at(0));
    else if (c.name == "dim1") dim1(j, c.args.at(0));
    else if (c.name == "depth") depth(j);
    else if (c.name == "grade") grade(j, c.args.at(0), std::stoul(c.args.at(1)));
    else if (c.name == "verify") verify(j, c.args.at(0));
    else if (c.name == "search") search(j, std::stoul(c.args.at(0)));
    else throw std::invalid_argument("unknown command '" + c.name + "'");
    return j;
  }

  Json run_all() {
    Json root;
    root["schema"] = kReportSchema;
    root["characteristic"] = s_.characteristic;
    root["variables"] = s_.variables;
    root["seed"] = opt_.seed;
    root["n_max"] = opt_.n_max;
    root["guard"] = opt_.guard;
    root["dim"] = R_.dimension();
    Json results = Json::array();
    for (const auto& c : s_.commands) results.push_back(run(c));
    root["results"] = results;
    root["red_alerts"] = red_alerts_;
    return root;
  }

  std::size_t red_alerts() const { return red_alerts_; }

 private:
  const Ideal& ideal(const std::string& name) {
    auto it = ideals_.find(name);
    if (it == ideals_.end()) it = ideals_.emplace(name, session_ideal(s_, R_, name)).first;
    return it->second;
  }

  const HilbertData& fit(const std::string& name) {
    auto it = fits_.find(name);
    if (it == fits_.end()) it = fits_.emplace(name, fit_coefficients(R_, ideal(name), opt_.fit())).first;
    return it->second;
  }

  void coeffs(Json& j, const std::string& name) {
    const auto& f = fit(name);
    j["ideal"] = name;
    j["dim"] = f.dim;
    j["e"] = f.coeffs;
    j["polynomial"] = binomial_basis_string(f.coeffs);
    j["postulation"] = postulation_json(f);
    j["postulation_text"] = f.postulation_string();
    j["colength"] = f.H(1);
    j["samples"] = f.samples;
    j["window"] = {f.window_lo, f.window_hi};
  }

  void postulation(Json& j, const std::string& name) {
    const auto& f = fit(name);
    j["ideal"] = name;
    j["postulation"] = postulation_json(f);
    j["postulation_text"] = f.postulation_string();
    j["floor"] = f.postulation_floor;
  }

  void dim1(Json& j, const std::string& name) {
    const Ideal& I = ideal(name);
    if (I.generators().size() != 1) {
      throw std::invalid_argument("dim1 needs a principal ideal, '" + name + "' has " +
                                  std::to_string(I.generators().size()) + " generators");
    }
    auto c = build_colon_chain(R_, I.generators().front(), opt_.guard, opt_.n_max);
    auto e = dim1_coefficients(c);
    j["ideal"] = name;
    j["x"] = I.generators().front().to_string();
    j["chain_lengths"] = c.lengths;
    j["l"] = c.l;
    j["e"] = {e.e0, e.e1};
    j["polynomial"] = binomial_basis_string({e.e0, e.e1});
    j["postulation"] = dim1_postulation(c);
    std::vector<std::int64_t> defects;
    for (long n = 0; n <= static_cast<long>(c.l) + 3; ++n) defects.push_back(dim1_defect(c, n));
    j["defects"] = defects;
    j["x_tilde"] = to_json(c.x_tilde.basis().generators());
  }

  void depth(Json& j) {
    auto d = depth_estimate(R_, opt_.trials, opt_.seed);
    j["dim"] = R_.dimension();
    j["depth"] = d.lower_bound;
    j["exact"] = d.exact;
    j["sequence"] = to_json(d.sequence);
    j["socle_witness"] = d.socle_witness ? Json(d.socle_witness->to_string()) : Json(nullptr);
    j["trials_used"] = d.trials_used;
    j["seed"] = d.seed;
  }

  void grade(Json& j, const std::string& name, std::size_t k) {
    if (k > R_.dimension()) throw std::invalid_argument("grade bound exceeds the dimension");
    auto g = grade_gr_lower_bound(R_, ideal(name), k, default_grade_bound(fit(name)), opt_.seed, opt_.trials);
    j["ideal"] = name;
    j["k"] = k;
    j["certified"] = g.certified;
    j["check_bound"] = g.check_bound;
    j["sequence"] = to_json(g.sequence);
    j["failed_stage"] = g.failed_stage < 0 ? Json(nullptr) : Json(g.failed_stage + 1);
    j["seed"] = g.seed;
  }

  void add_reports(Json& j, const std::vector<TheoremReport>& reports) {
    Json arr = Json::array();
    std::map<std::string, std::size_t> summary;
    std::size_t red = 0;
    for (const auto& r : reports) {
      arr.push_back(to_json(r));
      ++summary[to_string(r.conclusion)];
      if (r.red_alert()) ++red;
    }
    red_alerts_ += red;
    Json sj = Json::object();
    for (const char* k : {"holds", "fails", "vacuous", "inconclusive"}) sj[k] = summary[k];
    j["summary"] = sj;
    j["red_alerts"] = red;
    j["reports"] = arr;
  }

  void verify(Json& j, const std::string& name) {
    VerificationContext ctx(R_, ideal(name), opt_.verify());
    j["ideal"] = name;
    add_reports(j, verify_all(ctx));
  }

  void search(Json& j, std::size_t budget) {
    SearchConfig cfg;
    cfg.seed = opt_.seed;
    cfg.generator.characteristic = s_.characteristic;
    cfg.verify = opt_.verify();
    j["budget"] = budget;
    add_reports(j, search_counterexample(cfg, budget));
  }

  Session s_;
  RunOptions opt_;
  QuotientRing R_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, HilbertData> fits_;
  std::size_t red_alerts_ = 0;
};

namespace detail {

inline std::string json_inline(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + json_inline(v[i]);
    return out + ")";
  }
  return v.dump();
}

inline void row(std::ostringstream& os, const std::string& key, const Json& v) {
  os << "  " << key;
  for (std::size_t i = key.size(); i < 14; ++i) os << ' ';
  os << json_inline(v) << "\n";
}

inline void render_reports(std::ostringstream& os, const Json& j) {
  for (const auto& r : j["reports"]) {
    os << "  [" << r["conclusion"].get<std::string>() << "] " << r["statement_id"].get<std::string>();
    if (r["red_alert"].get<bool>()) os << "  RED ALERT";
    os << "\n";
    for (const auto& h : r["hypotheses"]) {
      os << "      " << h["status"].get<std::string>() << ": " << h["name"].get<std::string>() << "\n";
    }
    std::string w;
    for (const auto& [k, v] : r["witness"].items()) {
      if (k == "polynomial" || k == "defect") continue;
      w += (w.empty() ? "" : "  ") + k + "=" + json_inline(v);
    }
    if (!w.empty()) os << "      " << w << "\n";
    if (r["red_alert"].get<bool>()) os << "      seed " << r["seed"].dump() << "\n" << r["reproduction"].get<std::string>();
  }
  const auto& s = j["summary"];
  os << "  holds " << s["holds"] << ", fails " << s["fails"] << ", vacuous " << s["vacuous"] << ", inconclusive "
     << s["inconclusive"] << ", red alerts " << j["red_alerts"] << "\n";
}

}  // namespace detail

/// Human-readable table for a report produced by SessionRunner::run_all.
inline std::string render_text(const Json& root) {
  std::ostringstream os;
  os << "characteristic " << root["characteristic"] << ", dim " << root["dim"] << ", seed " << root["seed"] << "\n";
  for (const auto& j : root["results"]) {
    const std::string cmd = j["command"].get<std::string>();
    os << "\n" << cmd;
    if (j.contains("ideal")) os << " " << j["ideal"].get<std::string>();
    if (j.contains("k")) os << " " << j["k"];
    if (j.contains("budget")) os << " " << j["budget"];
    os << "\n";
    if (cmd == "coeffs") {
      detail::row(os, "dim", j["dim"]);
      detail::row(os, "e", j["e"]);
      detail::row(os, "P(n)", j["polynomial"]);
      detail::row(os, "postulation", j["postulation_text"]);
      detail::row(os, "length(R/I)", j["colength"]);
      detail::row(os, "H(1..)", j["samples"]);
    } else if (cmd == "postulation") {
      detail::row(os, "postulation", j["postulation_text"]);
    } else if (cmd == "dim1") {
      detail::row(os, "x", j["x"]);
      detail::row(os, "chain", j["chain_lengths"]);
      detail::row(os, "l", j["l"]);
      detail::row(os, "e", j["e"]);
      detail::row(os, "P(n)", j["polynomial"]);
      detail::row(os, "postulation", j["postulation"]);
      detail::row(os, "P-H (n>=0)", j["defects"]);
    } else if (cmd == "depth") {
      detail::row(os, "depth", j["depth"]);
      detail::row(os, "exact", j["exact"]);
      detail::row(os, "sequence", j["sequence"]);
      detail::row(os, "socle", j["socle_witness"]);
    } else if (cmd == "grade") {
      detail::row(os, "certified", j["certified"]);
      detail::row(os, "bound", j["check_bound"]);
      detail::row(os, "sequence", j["sequence"]);
    } else if (cmd == "verify" || cmd == "search") {
      detail::render_reports(os, j);
    }
  }
  return os.str();
}

}  // namespace hk
