// Command-line surface over the hyperspec library: families, distances,
// distance spectral radius, graft checks, hypertree enumeration, and the
// extremal-ordering verification suite.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperspec/extremal.hpp"
#include "hyperspec/io.hpp"

namespace hs = hyperspec;

namespace {

struct RunConfig {
  double tol = 1e-10;
  long max_iter = 200000;
  std::uint64_t seed = 0;
  std::string format = "text";

  hs::SpectralOptions spectral() const { return {tol, max_iter}; }
  bool json() const { return format == "json"; }
};

std::string graft_report_json(const hs::GraftReport& r) {
  std::ostringstream out;
  out << "{\"before_rho\":" << hs::fmt_double(r.before_rho)
      << ",\"after_rho\":" << hs::fmt_double(r.after_rho)
      << ",\"gap\":" << hs::fmt_double(r.gap)
      << ",\"verdict\":\"" << hs::to_string(r.verdict) << "\""
      << ",\"seed\":" << r.seed
      << ",\"before\":" << hs::to_json(r.before)
      << ",\"after\":" << hs::to_json(r.after) << "}";
  return out.str();
}

void print_graft_text(const hs::GraftReport& r, const std::string& label) {
  std::cout << label << ": " << hs::to_string(r.verdict)
            << "  before_rho=" << hs::fmt_double(r.before_rho)
            << "  after_rho=" << hs::fmt_double(r.after_rho)
            << "  gap=" << hs::fmt_double(r.gap) << "\n";
}

int run_family(const RunConfig&, const std::string& kind_str,
               const std::map<std::string, long>& params, const std::string& spec_path,
               const std::string& input, const std::string& out_path) {
  hs::FamilySpec spec;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) throw hs::ParseError("family: cannot open " + spec_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    spec = hs::family_spec_from_json(buf.str());
  } else {
    spec.kind = hs::family_kind_from_string(kind_str);
    spec.params = params;
  }
  hs::Hypergraph g;
  if (input.empty()) {
    g = hs::materialize(spec);
  } else {
    g = hs::materialize(spec, hs::read_uhg_file(input));
  }
  if (out_path.empty()) {
    hs::write_uhg(std::cout, g);
  } else {
    hs::write_uhg_file(out_path, g);
  }
  return 0;
}

int run_rho(const RunConfig& cfg, const std::string& path) {
  const hs::SpectralResult r = hs::spectral_radius(hs::read_uhg_file(path), cfg.spectral());
  if (cfg.json()) {
    std::cout << "{\"schema\":1,\"rho\":" << hs::fmt_double(r.rho) << ",\"perron\":[";
    for (size_t i = 0; i < r.perron.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << hs::fmt_double(r.perron[i]);
    }
    std::cout << "],\"residual\":" << hs::fmt_double(r.residual)
              << ",\"iterations\":" << r.iterations << "}\n";
  } else {
    std::cout << "rho " << hs::fmt_double(r.rho) << "\n"
              << "residual " << hs::fmt_double(r.residual) << "\n"
              << "iterations " << r.iterations << "\n";
  }
  return 0;
}

int run_distance(const RunConfig& cfg, const std::string& path) {
  const hs::DistanceMatrix d = hs::distance_matrix(hs::read_uhg_file(path));
  if (cfg.json()) {
    std::cout << "{\"schema\":1,\"n\":" << d.n << ",\"d\":[";
    for (int i = 0; i < d.n; ++i) {
      if (i) std::cout << ",";
      std::cout << "[";
      for (int j = 0; j < d.n; ++j) {
        if (j) std::cout << ",";
        std::cout << d(i, j);
      }
      std::cout << "]";
    }
    std::cout << "]}\n";
  } else {
    std::cout << hs::to_csv(d);
  }
  return 0;
}

int run_graft(const RunConfig& cfg, int type, int campaign, const std::string& input,
              long u, long v, long e, long p, long q, long s, const std::vector<int>& t) {
  const hs::SpectralOptions opts = cfg.spectral();
  if (campaign > 0) {
    const hs::CampaignResult res = hs::graft_campaign(type, campaign, cfg.seed, opts);
    if (cfg.json()) {
      std::cout << "{\"schema\":1,\"type\":" << res.type << ",\"count\":" << res.total
                << ",\"strict_pass\":" << res.strict_pass
                << ",\"indistinguishable\":" << res.indistinguishable
                << ",\"violation\":" << res.violation << ",\"reports\":[";
      for (size_t i = 0; i < res.reports.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << graft_report_json(res.reports[i]);
      }
      std::cout << "]}\n";
    } else {
      std::cout << "graft " << type << " campaign: " << res.total << " instances, "
                << res.strict_pass << " StrictPass, " << res.indistinguishable
                << " Indistinguishable, " << res.violation << " Violation\n";
      for (const auto& r : res.reports) {
        if (r.verdict != hs::Verdict::StrictPass) {
          print_graft_text(r, "  seed " + std::to_string(r.seed));
        }
      }
    }
    return res.violation > 0 ? 1 : 0;
  }

  const hs::Hypergraph base = hs::read_uhg_file(input);
  if (type == 1) {
    const hs::GraftReport r =
        hs::graft1(base, static_cast<int>(u), static_cast<int>(p), static_cast<int>(q), opts);
    if (cfg.json()) {
      std::cout << "{\"schema\":1,\"type\":1,\"report\":" << graft_report_json(r) << "}\n";
    } else {
      print_graft_text(r, "graft 1");
    }
    return r.verdict == hs::Verdict::Violation ? 1 : 0;
  }
  if (type == 2) {
    const hs::Graft2Report r =
        hs::graft2(base, static_cast<int>(u), static_cast<int>(v), static_cast<int>(e),
                   static_cast<int>(p), static_cast<int>(q), opts);
    if (cfg.json()) {
      std::cout << "{\"schema\":1,\"type\":2,\"verdict\":\"" << hs::to_string(r.verdict)
                << "\",\"toward_q\":" << graft_report_json(r.toward_q)
                << ",\"toward_p\":" << graft_report_json(r.toward_p) << "}\n";
    } else {
      std::cout << "graft 2: " << hs::to_string(r.verdict) << "\n";
      print_graft_text(r.toward_q, "  (p-1,q+1)");
      print_graft_text(r.toward_p, "  (p+1,q-1)");
    }
    return r.verdict == hs::Verdict::Violation ? 1 : 0;
  }
  const hs::GraftReport r =
      hs::graft3(base, static_cast<int>(e), static_cast<int>(s),
                 [&] {
                   std::vector<hs::RootedPart> parts;
                   if (!base.k) throw hs::NotUniform("graft 3: base is not uniform");
                   for (int ti : t) parts.push_back({hs::hyperstar(ti * (*base.k - 1) + 1, *base.k), 0});
                   return parts;
                 }(),
                 opts);
  if (cfg.json()) {
    std::cout << "{\"schema\":1,\"type\":3,\"report\":" << graft_report_json(r) << "}\n";
  } else {
    print_graft_text(r, "graft 3");
  }
  return r.verdict == hs::Verdict::Violation ? 1 : 0;
}

int run_enumerate(const RunConfig&, int k, int m, const std::string& out_dir) {
  const std::vector<hs::Hypergraph> classes = hs::generate_hypertrees(k, m);
  std::filesystem::create_directories(out_dir);
  std::ostringstream manifest;
  manifest << "{\"schema\":1,\"k\":" << k << ",\"m\":" << m
           << ",\"count\":" << classes.size() << ",\"classes\":[";
  for (size_t i = 0; i < classes.size(); ++i) {
    std::ostringstream name;
    name << "k" << k << "_m" << m << "_" << std::setw(3) << std::setfill('0') << i << ".uhg";
    hs::write_uhg_file(out_dir + "/" + name.str(), classes[i]);
    if (i) manifest << ",";
    manifest << "{\"file\":\"" << name.str() << "\",\"code\":\""
             << hs::canonical_form(classes[i]).str() << "\"}";
  }
  manifest << "]}";
  std::ofstream mf(out_dir + "/manifest.json");
  mf << manifest.str() << "\n";
  std::cout << classes.size() << " classes written to " << out_dir << "\n";
  return 0;
}

std::string claim_json(const hs::TheoremClaim& c) {
  std::ostringstream out;
  out << "{\"name\":\"" << c.name << "\",\"applicable\":" << (c.applicable ? "true" : "false");
  if (c.applicable) {
    out << ",\"verdict\":\"" << hs::to_string(c.verdict) << "\""
        << ",\"expected\":\"" << c.expected_code << "\""
        << ",\"witness\":\"" << c.witness_code << "\""
        << ",\"matches\":" << (c.matches ? "true" : "false");
    if (c.gap) out << ",\"gap\":" << hs::fmt_double(*c.gap);
  }
  out << "}";
  return out.str();
}

int run_verify(const RunConfig& cfg, int k, int m, const std::string& theorem) {
  const hs::SpectralOptions opts = cfg.spectral();
  const int n = 1 + (k - 1) * m;
  const bool all = theorem.empty();
  bool ok = true;
  std::vector<std::string> json_parts;

  const auto want = [&](const char* name) { return all || theorem == name; };

  if (want("max") || want("min") || want("second-max") || want("second-min")) {
    hs::OrderingCertificate cert = hs::verify_ordering(k, m, opts);
    for (const auto& c : cert.claims) {
      if (!all && theorem != c.name) continue;
      if (c.applicable && c.verdict != hs::Verdict::StrictPass) ok = false;
      json_parts.push_back(claim_json(c));
      if (!cfg.json()) {
        std::cout << "theorem " << c.name << ": "
                  << (c.applicable
                          ? std::string(hs::to_string(c.verdict)) +
                                (c.matches ? "" : " (witness differs from predicted family)")
                          : std::string("not applicable"))
                  << "\n";
      }
    }
  }

  if (want("broom")) {
    const hs::BroomChainReport r = hs::verify_broom_chain(n, k, opts);
    const bool pass = r.decreasing == hs::Verdict::StrictPass &&
                      (!r.argmax_checked || r.argmax == hs::Verdict::StrictPass);
    ok = ok && pass;
    std::ostringstream j;
    j << "{\"name\":\"broom\",\"verdict\":\"" << hs::to_string(r.decreasing)
      << "\",\"argmax_checked\":" << (r.argmax_checked ? "true" : "false")
      << ",\"argmax\":\"" << hs::to_string(r.argmax) << "\",\"chain\":[";
    for (size_t i = 0; i < r.chain.size(); ++i) {
      if (i) j << ",";
      j << "{\"delta\":" << r.chain[i].delta << ",\"rho\":" << hs::fmt_double(r.chain[i].rho) << "}";
    }
    j << "]}";
    json_parts.push_back(j.str());
    if (!cfg.json()) {
      std::cout << "theorem broom: chain " << hs::to_string(r.decreasing);
      if (r.argmax_checked) std::cout << ", argmax " << hs::to_string(r.argmax);
      std::cout << "\n";
      for (const auto& entry : r.chain) {
        std::cout << "  delta " << entry.delta << " rho " << hs::fmt_double(entry.rho) << "\n";
      }
    }
  }

  if (want("quintic")) {
    const hs::QuinticMonotoneReport r = hs::verify_quintic_monotone(n, k, opts);
    bool identity = true;
    for (size_t i = 1; i < r.entries.size(); ++i) {
      identity = identity && hs::quintic_difference_identity_holds(n, k, r.entries[i].a);
    }
    const bool pass = r.increasing == hs::Verdict::StrictPass && identity &&
                      r.max_route_gap <= 1e-6;
    ok = ok && pass;
    std::ostringstream j;
    j << "{\"name\":\"quintic\",\"verdict\":\"" << hs::to_string(r.increasing)
      << "\",\"identity\":" << (identity ? "true" : "false")
      << ",\"max_route_gap\":" << hs::fmt_double(r.max_route_gap) << ",\"entries\":[";
    for (size_t i = 0; i < r.entries.size(); ++i) {
      if (i) j << ",";
      j << "{\"a\":" << r.entries[i].a
        << ",\"rho_power\":" << hs::fmt_double(r.entries[i].rho_power)
        << ",\"rho_root\":" << hs::fmt_double(r.entries[i].rho_root) << "}";
    }
    j << "]}";
    json_parts.push_back(j.str());
    if (!cfg.json()) {
      std::cout << "theorem quintic: " << hs::to_string(r.increasing)
                << ", identity " << (identity ? "holds" : "FAILS")
                << ", max route gap " << hs::fmt_double(r.max_route_gap) << "\n";
    }
  }

  if (want("orbit")) {
    std::vector<hs::Hypergraph> instances{hs::loose_path(n, k), hs::hyperstar(n, k)};
    if (m >= 4) instances.push_back(hs::f_graph(n, k));
    for (int delta = 2; delta <= m; ++delta) instances.push_back(hs::broom(n, k, delta));
    const int amax = (n - k) / (2 * (k - 1));
    for (int a = 1; a <= amax; ++a) instances.push_back(hs::double_broom(n, k, a));
    double deviation = 0.0;
    for (const auto& g : instances) {
      deviation = std::max(deviation, hs::verify_orbit_symmetry(g, opts));
    }
    const bool pass = deviation <= 1e-8;
    ok = ok && pass;
    std::ostringstream j;
    j << "{\"name\":\"orbit\",\"verdict\":\"" << (pass ? "StrictPass" : "Violation")
      << "\",\"instances\":" << instances.size()
      << ",\"max_deviation\":" << hs::fmt_double(deviation) << "}";
    json_parts.push_back(j.str());
    if (!cfg.json()) {
      std::cout << "theorem orbit: " << (pass ? "StrictPass" : "Violation")
                << ", max deviation " << hs::fmt_double(deviation) << " over "
                << instances.size() << " instances\n";
    }
  }

  if (cfg.json()) {
    std::cout << "{\"schema\":1,\"k\":" << k << ",\"m\":" << m << ",\"n\":" << n
              << ",\"pass\":" << (ok ? "true" : "false") << ",\"theorems\":[";
    for (size_t i = 0; i < json_parts.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << json_parts[i];
    }
    std::cout << "]}\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance spectral radius toolkit for k-uniform hypergraphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "residual tolerance")->capture_default_str();
  app.add_option("--max-iter", cfg.max_iter, "power iteration cap")->capture_default_str();
  app.add_option("--seed", cfg.seed, "campaign seed")->capture_default_str();
  app.add_option("--format", cfg.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_flag_callback("--json", [&cfg] { cfg.format = "json"; }, "shorthand for --format json");

  // lets the global flags appear after the subcommand, e.g. `rho p.uhg --json`
  app.fallthrough();

  auto* fam = app.add_subcommand("family", "materialize a named family to .uhg");
  std::string kind, fam_spec, fam_input, fam_out;
  long fn = 0, fk = 0, fdelta = 0, fa = 0, fu = 0, fv = 0, fp = 0, fq = 0, fe = 0, fs = 0;
  std::vector<int> ft;
  auto* o_kind = fam->add_option("--kind", kind);
  fam->add_option("--spec", fam_spec, "FamilySpec json file instead of flags")
      ->excludes(o_kind);
  auto* o_n = fam->add_option("--n", fn);
  auto* o_k = fam->add_option("--k", fk);
  auto* o_delta = fam->add_option("--delta", fdelta);
  auto* o_a = fam->add_option("--a", fa);
  fam->add_option("--input", fam_input, "base .uhg for anchored kinds");
  auto* o_u = fam->add_option("--u", fu);
  auto* o_v = fam->add_option("--v", fv);
  auto* o_p = fam->add_option("--p", fp);
  auto* o_q = fam->add_option("--q", fq);
  auto* o_e = fam->add_option("--e", fe);
  auto* o_s = fam->add_option("--s", fs);
  fam->add_option("--t", ft, "star sizes t1,t2,... for edge-split")->delimiter(',');
  fam->add_option("--out", fam_out, "output path (stdout when omitted)");

  auto* rho = app.add_subcommand("rho", "distance spectral radius of a .uhg file");
  std::string rho_path;
  rho->add_option("file", rho_path)->required();

  auto* dist = app.add_subcommand("distance", "distance matrix of a .uhg file");
  std::string dist_path;
  dist->add_option("file", dist_path)->required();

  auto* graft = app.add_subcommand("graft", "run a graft comparison or campaign");
  int g_type = 0, g_campaign = 0;
  std::string g_input;
  long gu = 0, gv = 0, ge = 0, gp = 0, gq = 0, gs = 0;
  std::vector<int> gt;
  graft->add_option("--type", g_type)->required()->check(CLI::Range(1, 3));
  graft->add_option("--campaign", g_campaign, "run N random instances instead");
  graft->add_option("--input", g_input, "base .uhg");
  graft->add_option("--u", gu);
  graft->add_option("--v", gv);
  graft->add_option("--e", ge);
  graft->add_option("--p", gp);
  graft->add_option("--q", gq);
  graft->add_option("--s", gs);
  graft->add_option("--t", gt)->delimiter(',');

  auto* enumerate = app.add_subcommand("enumerate", "isomorph-free k-uniform hypertrees");
  int e_k = 0, e_m = 0;
  std::string e_out;
  enumerate->add_option("--k", e_k)->required();
  enumerate->add_option("--m", e_m)->required();
  enumerate->add_option("--out", e_out)->required();

  auto* verify = app.add_subcommand("verify", "check the extremal theorems at (k, m)");
  int v_k = 0, v_m = 0;
  std::string v_theorem;
  verify->add_option("--k", v_k)->required();
  verify->add_option("--m", v_m)->required();
  verify->add_option("--theorem", v_theorem)
      ->check(CLI::IsMember({"max", "min", "second-max", "second-min", "broom", "quintic", "orbit"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fam) {
      if (kind.empty() && fam_spec.empty()) {
        std::cerr << "family: --kind or --spec required\n";
        return 2;
      }
      std::map<std::string, long> params;
      if (o_n->count()) params["n"] = fn;
      if (o_k->count()) params["k"] = fk;
      if (o_delta->count()) params["delta"] = fdelta;
      if (o_a->count()) params["a"] = fa;
      if (o_u->count()) params["u"] = fu;
      if (o_v->count()) params["v"] = fv;
      if (o_p->count()) params["p"] = fp;
      if (o_q->count()) params["q"] = fq;
      if (o_e->count()) params["e"] = fe;
      if (o_s->count()) params["s"] = fs;
      for (size_t i = 0; i < ft.size(); ++i) params["t" + std::to_string(i + 1)] = ft[i];
      return run_family(cfg, kind, params, fam_spec, fam_input, fam_out);
    }
    if (*rho) return run_rho(cfg, rho_path);
    if (*dist) return run_distance(cfg, dist_path);
    if (*graft) {
      if (g_campaign <= 0 && g_input.empty()) {
        std::cerr << "graft: --input required without --campaign\n";
        return 2;
      }
      return run_graft(cfg, g_type, g_campaign, g_input, gu, gv, ge, gp, gq, gs, gt);
    }
    if (*enumerate) return run_enumerate(cfg, e_k, e_m, e_out);
    if (*verify) return run_verify(cfg, v_k, v_m, v_theorem);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
