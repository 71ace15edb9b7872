#include "gndb/report.hpp"

#include <sstream>

#include <json.hpp>

namespace gndb {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json edge_to_json(const EdgeBalance& eb) {
  ordered_json j;
  j["a"] = eb.a;
  j["b"] = eb.b;
  j["w_ab"] = eb.w_ab;
  j["w_ba"] = eb.w_ba;
  j["eq"] = eb.eq_count;
  ordered_json table = ordered_json::array();
  for (const auto& [ij, count] : eb.d_table)
    table.push_back({{"i", ij.first}, {"j", ij.second}, {"count", count}});
  j["d_table"] = std::move(table);
  return j;
}

ordered_json class_to_json(const BalanceClass& cls, bool with_edges) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["type"] = "balance_class";
  j["n"] = cls.n;
  j["edge_count"] = cls.per_edge.size();
  j["db"] = cls.is_db;
  j["ndb_gamma"] = cls.ndb_gamma ? ordered_json(*cls.ndb_gamma) : ordered_json(nullptr);
  ordered_json per_k = ordered_json::array();
  for (const auto& [k, gdb] : cls.kgdb) {
    const auto& gamma = cls.kgndb.at(k);
    per_k.push_back({{"k", k},
                     {"gdb", gdb},
                     {"gndb_gamma", gamma ? ordered_json(*gamma) : ordered_json(nullptr)}});
  }
  j["per_k"] = std::move(per_k);
  if (with_edges) {
    ordered_json edges = ordered_json::array();
    for (const EdgeBalance& eb : cls.per_edge) edges.push_back(edge_to_json(eb));
    j["edges"] = std::move(edges);
  }
  return j;
}

ordered_json report_to_json(const ScanReport& r) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["type"] = "scan_report";
  j["source"] = r.source;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["ks"] = r.ks;
  j["gamma_filter"] = r.gamma_filter ? ordered_json(*r.gamma_filter) : ordered_json(nullptr);
  j["paranoid"] = r.paranoid;
  j["corpus_size"] = r.corpus_size;
  ordered_json matches = ordered_json::array();
  for (const MatchEntry& m : r.matches)
    matches.push_back({{"graph6", m.graph6},
                       {"n", m.n},
                       {"k", m.k},
                       {"gamma", m.gamma},
                       {"diameter", m.diameter},
                       {"bipartite", m.bipartite},
                       {"db", m.db},
                       {"ndb_gamma", m.ndb_gamma ? ordered_json(*m.ndb_gamma) : ordered_json(nullptr)}});
  j["matches"] = std::move(matches);
  ordered_json violations = ordered_json::array();
  for (const Violation& v : r.violations)
    violations.push_back({{"graph6", v.graph6},
                          {"predicate", v.predicate},
                          {"k", v.k},
                          {"edge", v.edge_a >= 0 ? ordered_json::array({v.edge_a, v.edge_b})
                                                 : ordered_json(nullptr)},
                          {"detail", v.detail}});
  j["violations"] = std::move(violations);
  j["k1_ndb_nonbipartite"] = r.k1_ndb_nonbipartite;
  return j;
}

}  // namespace

std::string report_serialize(const BalanceClass& cls, bool with_edges) {
  return class_to_json(cls, with_edges).dump(2) + "\n";
}

std::string report_serialize(const ScanReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

std::string render_summary(const BalanceClass& cls, bool with_edges) {
  std::ostringstream out;
  out << "graph: n=" << cls.n << " edges=" << cls.per_edge.size() << "\n";
  out << "DB: " << (cls.is_db ? "yes" : "no");
  if (cls.ndb_gamma) out << "  NDB with gamma=" << *cls.ndb_gamma;
  out << "\n";
  for (const auto& [k, gdb] : cls.kgdb) {
    if (k == 1) continue;
    out << k << "-GDB: " << (gdb ? "yes" : "no");
    const auto& gamma = cls.kgndb.at(k);
    if (gamma) out << "  " << k << "-GNDB with gamma=" << *gamma;
    out << "\n";
  }
  if (with_edges) {
    for (const EdgeBalance& eb : cls.per_edge) {
      out << "edge (" << eb.a << "," << eb.b << "): |W_ab|=" << eb.w_ab << " |W_ba|=" << eb.w_ba
          << " eq=" << eb.eq_count << "  D:";
      for (const auto& [ij, count] : eb.d_table)
        out << " D^" << ij.first << "_" << ij.second << "=" << count;
      out << "\n";
    }
  }
  return out.str();
}

std::string render_summary(const ScanReport& r) {
  std::ostringstream out;
  out << "scan " << r.source << ": n=" << r.n_min << ".." << r.n_max << " ks={";
  for (size_t i = 0; i < r.ks.size(); ++i) out << (i ? "," : "") << r.ks[i];
  out << "}";
  if (r.gamma_filter) out << " gamma=" << *r.gamma_filter;
  if (r.paranoid) out << " (paranoid)";
  out << "\n";
  long long total = 0;
  out << "corpus:";
  for (size_t i = 0; i < r.corpus_size.size(); ++i) {
    out << " " << r.corpus_size[i];
    total += r.corpus_size[i];
  }
  out << "  (total " << total << ")\n";
  out << "matches: " << r.matches.size() << "\n";
  for (const MatchEntry& m : r.matches)
    out << "  " << m.graph6 << "  n=" << m.n << " k=" << m.k << " gamma=" << m.gamma
        << " diameter=" << m.diameter << (m.bipartite ? " bipartite" : " NOT bipartite") << "\n";
  if (!r.k1_ndb_nonbipartite.empty()) {
    out << "k=1 carve-out (NDB, non-bipartite): " << r.k1_ndb_nonbipartite.size() << "\n";
    for (const std::string& s : r.k1_ndb_nonbipartite) out << "  " << s << "\n";
  }
  out << "violations: " << r.violations.size() << "\n";
  for (const Violation& v : r.violations) {
    out << "  " << v.graph6 << "  " << v.predicate << "[k=" << v.k << "]";
    if (v.edge_a >= 0) out << " edge (" << v.edge_a << "," << v.edge_b << ")";
    out << ": " << v.detail << "\n";
  }
  double elapsed = 0;
  for (double e : r.elapsed_seconds) elapsed += e;
  out << "elapsed: " << elapsed << "s\n";
  return out.str();
}

}  // namespace gndb
