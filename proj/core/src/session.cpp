#include "qrohf/session.hpp"

#include <cmath>
#include <utility>

#include "json.hpp"

namespace qrohf {

namespace {

using nlohmann::ordered_json;

std::string idx(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

double get_number(const ordered_json& j, const std::string& where) {
  if (!j.is_number()) throw SessionError(where, "expected a number");
  return j.get<double>();
}

std::vector<double> get_grades(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw SessionError(where, "expected a non-empty array of grades");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t s = 0; s < j.size(); ++s) {
    out.push_back(get_number(j[s], idx(where, s)));
  }
  return out;
}

Qrohfn parse_cell(const ordered_json& j, const std::string& where) {
  if (!j.is_object()) throw SessionError(where, "expected an object with mu and nu");
  if (!j.contains("mu") || !j.contains("nu")) {
    throw SessionError(where, "cell needs both mu and nu grade arrays");
  }
  Qrohfn cell;
  cell.mu = get_grades(j.at("mu"), where + ".mu");
  cell.nu = get_grades(j.at("nu"), where + ".nu");
  return cell;
}

ordered_json cell_json(const Qrohfn& x) {
  return ordered_json{{"mu", x.mu}, {"nu", x.nu}};
}

ordered_json matrix_json(const Qrohfpr& a) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j) {
        row.push_back(nullptr);
      } else {
        row.push_back(cell_json(a.at(i, j)));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Session parse_session(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SessionError("", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SessionError("", "session document must be an object");

  Session session;
  if (!doc.contains("q")) throw SessionError("q", "missing rung");
  session.config.q = get_number(doc.at("q"), "q");
  if (!(session.config.q >= 1.0)) throw SessionError("q", "rung must be >= 1");
  const Rung q = session.config.rung();

  if (!doc.contains("l")) throw SessionError("l", "missing hesitancy length");
  const double l_raw = get_number(doc.at("l"), "l");
  if (l_raw < 1.0 || l_raw != std::floor(l_raw)) {
    throw SessionError("l", "hesitancy length must be a positive integer");
  }
  const std::size_t l = static_cast<std::size_t>(l_raw);

  if (!doc.contains("alternatives") || !doc.at("alternatives").is_array()) {
    throw SessionError("alternatives", "missing alternative names");
  }
  for (std::size_t i = 0; i < doc.at("alternatives").size(); ++i) {
    const auto& name = doc.at("alternatives")[i];
    if (!name.is_string()) throw SessionError(idx("alternatives", i), "expected a string");
    session.alternatives.push_back(name.get<std::string>());
  }
  const std::size_t n = session.alternatives.size();
  if (n < 2) throw SessionError("alternatives", "need at least 2 alternatives");

  if (doc.contains("thresholds")) {
    const auto& th = doc.at("thresholds");
    if (!th.is_object()) throw SessionError("thresholds", "expected an object");
    if (th.contains("ci_bar")) {
      session.config.ci_bar = get_number(th.at("ci_bar"), "thresholds.ci_bar");
    }
    if (th.contains("gci_bar")) {
      session.config.gci_bar = get_number(th.at("gci_bar"), "thresholds.gci_bar");
    }
  }
  if (doc.contains("consensus")) {
    const auto& co = doc.at("consensus");
    if (!co.is_object()) throw SessionError("consensus", "expected an object");
    if (co.contains("zeta")) {
      session.config.zeta = get_number(co.at("zeta"), "consensus.zeta");
    }
    if (co.contains("theta_max")) {
      const double tm = get_number(co.at("theta_max"), "consensus.theta_max");
      if (tm < 1.0 || tm != std::floor(tm)) {
        throw SessionError("consensus.theta_max", "must be a positive integer");
      }
      session.config.theta_max = static_cast<std::size_t>(tm);
    }
  }
  {
    ValidationReport cfg = validate(session.config);
    if (!cfg.ok()) throw SessionError("thresholds", cfg.issues.front());
  }

  if (!doc.contains("experts") || !doc.at("experts").is_array() || doc.at("experts").empty()) {
    throw SessionError("experts", "missing expert list");
  }
  const auto& experts = doc.at("experts");
  for (std::size_t t = 0; t < experts.size(); ++t) {
    const std::string where = idx("experts", t);
    const auto& ex = experts[t];
    if (!ex.is_object()) throw SessionError(where, "expected an object");
    session.expert_ids.push_back(ex.contains("id") && ex.at("id").is_string()
                                     ? ex.at("id").get<std::string>()
                                     : "d" + std::to_string(t + 1));
    if (!ex.contains("weight")) throw SessionError(where + ".weight", "missing weight");
    session.panel.weights.push_back(get_number(ex.at("weight"), where + ".weight"));

    if (!ex.contains("matrix") || !ex.at("matrix").is_array() || ex.at("matrix").size() != n) {
      throw SessionError(where + ".matrix", "expected an " + std::to_string(n) + "x" +
                                                std::to_string(n) + " matrix");
    }
    Qrohfpr mat = make_neutral_relation(n, l, q);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = ex.at("matrix")[i];
      const std::string rwhere = where + ".matrix" + "[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != n) {
        throw SessionError(rwhere, "expected a row of " + std::to_string(n) + " cells");
      }
      for (std::size_t j = 0; j < n; ++j) {
        const std::string cwhere = rwhere + "[" + std::to_string(j) + "]";
        const auto& cell = row[j];
        if (cell.is_null()) {
          if (i != j) {
            throw SessionError(cwhere, "missing off-diagonal entry (reciprocity "
                                       "requires both (i,j) and (j,i))");
          }
          continue;  // diagonal defaults to the neutral element
        }
        Qrohfn value = parse_cell(cell, cwhere);
        if (value.mu.size() != l || value.nu.size() != l) {
          throw SessionError(cwhere, "expected " + std::to_string(l) + " grades per set");
        }
        mat.at(i, j) = std::move(value);
      }
    }
    ValidationReport check = validate(mat, q);
    if (!check.ok()) {
      throw SessionError(where + ".matrix", check.issues.front());
    }
    session.panel.matrices.push_back(std::move(mat));
  }

  ValidationReport panel_check = validate(session.panel, q);
  if (!panel_check.ok()) {
    throw SessionError("experts", panel_check.issues.front());
  }
  return session;
}

std::string emit_session(const Session& session) {
  ordered_json doc;
  doc["q"] = session.config.q;
  doc["l"] = session.panel.matrices.empty() ? 1 : session.panel.matrices.front().grade_count();
  doc["alternatives"] = session.alternatives;
  doc["thresholds"] = {{"ci_bar", session.config.ci_bar},
                       {"gci_bar", session.config.gci_bar}};
  doc["consensus"] = {{"zeta", session.config.zeta},
                      {"theta_max", session.config.theta_max}};
  ordered_json experts = ordered_json::array();
  for (std::size_t t = 0; t < session.panel.expert_count(); ++t) {
    ordered_json ex;
    ex["id"] = t < session.expert_ids.size() ? session.expert_ids[t]
                                             : "d" + std::to_string(t + 1);
    ex["weight"] = session.panel.weights[t];
    ex["matrix"] = matrix_json(session.panel.matrices[t]);
    experts.push_back(std::move(ex));
  }
  doc["experts"] = std::move(experts);
  return doc.dump(2) + "\n";
}

}  // namespace qrohf
