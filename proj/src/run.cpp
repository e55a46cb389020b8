#include "hysturm/run.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "hysturm/assembly.hpp"
#include "hysturm/channel_basis.hpp"
#include "hysturm/dipole.hpp"
#include "hysturm/hyperangular.hpp"
#include "hysturm/solver.hpp"

namespace hysturm {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

SymmetryBlock parse_block(const json& j) {
  SymmetryBlock b;
  b.L = j.at("L").get<int>();
  b.M = j.value("M", 0);
  b.S_spin = j.at("S").get<int>();
  return b;
}

std::vector<PairLL> parse_pairs(const json& j) {
  std::vector<PairLL> pairs;
  for (const auto& p : j) pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  if (pairs.empty()) throw std::invalid_argument("config: empty pair list");
  return pairs;
}

std::vector<SetSpec> parse_sets(const json& j) {
  std::vector<SetSpec> sets;
  for (const auto& s : j) {
    SetSpec spec;
    spec.kappa = s.at("kappa").get<double>();
    spec.calZ = s.at("calZ").get<double>();
    spec.n_radial = s.at("n_radial").get<int>();
    spec.n_angular = s.at("n_angular").get<int>();
    sets.push_back(spec);
  }
  if (sets.empty()) throw std::invalid_argument("config: empty set list");
  return sets;
}

BasisOptions parse_options(const json& cfg, bool independent) {
  BasisOptions opts;
  if (cfg.contains("bspline")) {
    const auto& b = cfg["bspline"];
    opts.spline_order = b.value("order", 7);
    opts.mesh.intervals = b.value("intervals", 300);
    const std::string mesh = b.value("mesh", "graded");
    if (mesh == "uniform")
      opts.mesh.kind = MeshKind::Uniform;
    else if (mesh == "graded")
      opts.mesh.kind = MeshKind::Graded;
    else
      throw std::invalid_argument("config: unknown mesh kind " + mesh);
    opts.quad_nodes = b.value("quad_nodes", 0);
  }
  const std::string backend = cfg.value("angular_basis", "sturmian");
  if (backend == "jacobi")
    opts.backend = AngularBackend::Jacobi;
  else if (backend != "sturmian")
    throw std::invalid_argument("config: unknown angular basis " + backend);
  opts.include_v0 = cfg.value("include_v0", !independent);
  opts.lambda_override = cfg.value("lambda", -1);
  return opts;
}

void spectrum_rows(Report& rep, const ChannelBasis& basis,
                   const AssembledSystem& sys, const SpectralResult& res,
                   int n_states, const std::string& prefix) {
  const int n = std::min<int>(n_states, res.energies.size());
  for (int i = 0; i < n; ++i) {
    ReportRow row;
    row.type = "state";
    row.key = prefix + std::to_string(i);
    const auto e = res.energies[i];
    row.values = {e.real(), e.imag(), -2.0 * e.imag()};
    if (res.vectors.size() > 0) {
      // dominant channel by Mulliken-style weight c (S c)
      const Eigen::VectorXd c = res.vectors.col(i).real();
      const Eigen::VectorXd sc = sys.S * c;
      double best = -1.0;
      int bset = 0, bpair = 0;
      for (size_t is = 0; is < basis.sets().size(); ++is)
        for (size_t ip = 0; ip < basis.pairs().size(); ++ip) {
          const int off = basis.block_offset(is, ip);
          const int len = basis.family(is, ip).fam.count() *
                          basis.family(is, ip).radial->count();
          const double w = c.segment(off, len).dot(sc.segment(off, len));
          if (w > best) {
            best = w;
            bset = is;
            bpair = ip;
          }
        }
      row.label = basis.channel_label(bset, bpair);
      row.values.push_back(best);
    }
    rep.rows.push_back(std::move(row));
  }
}

struct BuiltBlock {
  ChannelBasis basis;
  AssembledSystem system;
  PrunedSystem pruned;
};

BuiltBlock build_block(const json& cfg, const SymmetryBlock& block,
                       const std::vector<PairLL>& pairs,
                       const std::vector<SetSpec>& sets, bool independent,
                       std::string* summary) {
  BasisOptions opts = parse_options(cfg, independent);
  const double Z = cfg.at("Z").get<double>();
  const int q_max = cfg.value("q_max", -1);
  const double threshold = cfg.value("prune_threshold", 1e-10);
  ChannelBasis basis(block, pairs, sets, opts);
  AssembledSystem sys = assemble(basis, Z, q_max, !independent);
  PrunedSystem pruned = prune(sys, threshold);
  if (summary) {
    std::ostringstream os;
    os << "block L=" << block.L << " S=" << block.S_spin << " dim "
       << basis.dim() << ", pruned " << pruned.discarded << " -> "
       << pruned.dim() << "\n";
    *summary += os.str();
  }
  return {std::move(basis), std::move(sys), std::move(pruned)};
}

void run_bound(const json& cfg, Report& rep, bool independent,
               std::string* summary) {
  const auto block = parse_block(cfg.at("block"));
  const auto pairs = parse_pairs(cfg.at("pairs"));
  const auto sets = parse_sets(cfg.at("sets"));
  const int n_states = cfg.value("n_states", 8);

  if (cfg.value("pair_scan", false)) {
    for (size_t k = 1; k <= pairs.size(); ++k) {
      std::vector<PairLL> sub(pairs.begin(), pairs.begin() + k);
      auto built = build_block(cfg, block, sub, sets, independent, summary);
      auto res = solve_bound(built.pruned, false);
      ReportRow row;
      row.type = "scan";
      row.key = "pairs=" + std::to_string(k);
      for (int i = 0; i < std::min<int>(n_states, res.energies.size()); ++i)
        row.values.push_back(res.energies[i].real());
      rep.rows.push_back(std::move(row));
      if (k == pairs.size()) {
        auto full = solve_bound(built.pruned, true);
        rep.meta.emplace_back("basis_dim", std::to_string(built.basis.dim()));
        rep.meta.emplace_back("pruned", std::to_string(built.pruned.discarded));
        spectrum_rows(rep, built.basis, built.system, full, n_states, "");
      }
    }
    return;
  }

  if (cfg.contains("n_angular_scan")) {
    for (int nang : cfg["n_angular_scan"]) {
      auto scaled = sets;
      for (auto& s : scaled) s.n_angular = nang;
      auto built = build_block(cfg, block, pairs, scaled, independent, summary);
      auto res = solve_bound(built.pruned, false);
      ReportRow row;
      row.type = "scan";
      row.key = "N=" + std::to_string(nang);
      for (int i = 0; i < std::min<int>(n_states, res.energies.size()); ++i)
        row.values.push_back(res.energies[i].real());
      rep.rows.push_back(std::move(row));
    }
    return;
  }

  auto built = build_block(cfg, block, pairs, sets, independent, summary);
  auto res = solve_bound(built.pruned, true);
  rep.meta.emplace_back("basis_dim", std::to_string(built.basis.dim()));
  rep.meta.emplace_back("pruned", std::to_string(built.pruned.discarded));
  spectrum_rows(rep, built.basis, built.system, res, n_states, "");
}

void run_resonance(const json& cfg, Report& rep, std::string* summary) {
  const auto block = parse_block(cfg.at("block"));
  const auto pairs = parse_pairs(cfg.at("pairs"));
  const auto sets = parse_sets(cfg.at("sets"));
  const auto thetas = cfg.at("theta").get<std::vector<double>>();
  if (thetas.size() < 2)
    throw std::invalid_argument("config: resonance mode needs two theta values");
  const auto window = cfg.at("window").get<std::vector<double>>();
  const double stab = cfg.value("stability_tol", 1e-4);
  const double gmin = cfg.value("gamma_min", 1e-7);

  auto built = build_block(cfg, block, pairs, sets, false, summary);
  rep.meta.emplace_back("basis_dim", std::to_string(built.basis.dim()));
  rep.meta.emplace_back("pruned", std::to_string(built.pruned.discarded));

  auto r1 = solve_scaled(built.pruned, thetas[0], false);
  auto r2 = solve_scaled(built.pruned, thetas[1], false);
  auto cand =
      extract_resonances(r1, r2, window[0], window[1], stab, gmin);
  for (size_t i = 0; i < cand.size(); ++i) {
    ReportRow row;
    row.type = "resonance";
    row.key = std::to_string(i);
    row.values = {cand[i].energy, cand[i].gamma, cand[i].stability};
    rep.rows.push_back(std::move(row));
  }
}

void run_oscillator(const json& cfg, Report& rep, std::string* summary) {
  const auto iblock = parse_block(cfg.at("block"));
  const auto ipairs = parse_pairs(cfg.at("pairs"));
  const auto fblock = parse_block(cfg.at("final_block"));
  const auto fpairs = parse_pairs(cfg.at("final_pairs"));
  const auto sets = parse_sets(cfg.at("sets"));
  const double constant = cfg.value("gauge_constant", 2.0);
  const int n_states = cfg.value("n_states", 6);

  auto bi = build_block(cfg, iblock, ipairs, sets, false, summary);
  auto bf = build_block(cfg, fblock, fpairs, sets, false, summary);
  auto ri = solve_bound(bi.pruned, true);
  auto rf = solve_bound(bf.pruned, true);
  spectrum_rows(rep, bi.basis, bi.system, ri, n_states, "i");
  spectrum_rows(rep, bf.basis, bf.system, rf, n_states, "f");

  Eigen::MatrixXd dl = dipole_matrix(bf.basis, bi.basis, Gauge::Length);
  Eigen::MatrixXd dv = dipole_matrix(bf.basis, bi.basis, Gauge::Velocity);
  const Eigen::VectorXd ni = bi.system.norms.cwiseInverse();
  const Eigen::VectorXd nf = bf.system.norms.cwiseInverse();
  dl = nf.asDiagonal() * dl * ni.asDiagonal();
  dv = nf.asDiagonal() * dv * ni.asDiagonal();

  std::vector<std::pair<int, int>> transitions;
  for (const auto& t : cfg.at("transitions"))
    transitions.push_back({t.at(0).get<int>(), t.at(1).get<int>()});

  auto fl = oscillator_strengths(ri, rf, dl, Gauge::Length, constant, transitions);
  auto fv =
      oscillator_strengths(ri, rf, dv, Gauge::Velocity, constant, transitions);
  for (size_t i = 0; i < fl.size(); ++i) {
    ReportRow row;
    row.type = "transition";
    row.key = std::to_string(fl[i].initial) + "->" + std::to_string(fl[i].final_);
    const double disc =
        std::abs(fl[i].f) > 0 ? std::abs(fv[i].f - fl[i].f) / std::abs(fl[i].f)
                              : 0.0;
    row.values = {fl[i].e_initial, fl[i].e_final, fl[i].f, fv[i].f, disc};
    rep.rows.push_back(std::move(row));
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "# hysturm-report\t1\n";
  for (const auto& [k, v] : meta) os << "# " << k << "\t" << v << "\n";
  for (const auto& row : rows) {
    os << row.type << "\t" << row.key;
    for (double v : row.values) os << "\t" << fmt(v);
    if (!row.label.empty()) os << "\t" << row.label;
    os << "\n";
  }
  return os.str();
}

Report Report::from_text(const std::string& text) {
  Report rep;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string k, v;
      ls >> k;
      std::getline(ls, v);
      if (!v.empty() && v[0] == '\t') v = v.substr(1);
      rep.meta.emplace_back(k, v);
      continue;
    }
    std::istringstream ls(line);
    ReportRow row;
    std::string field;
    std::getline(ls, row.type, '\t');
    std::getline(ls, row.key, '\t');
    while (std::getline(ls, field, '\t')) {
      try {
        size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos == field.size())
          row.values.push_back(v);
        else
          row.label = field;
      } catch (...) {
        row.label = field;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

const ReportRow* Report::find(const std::string& type,
                              const std::string& key) const {
  for (const auto& row : rows)
    if (row.type == type && row.key == key) return &row;
  return nullptr;
}

Report run_config(const std::string& config_json, std::string* summary) {
  const json cfg = json::parse(config_json);
  const std::string mode = cfg.at("mode").get<std::string>();
  const auto t0 = std::chrono::steady_clock::now();

  Report rep;
  rep.meta.emplace_back("mode", mode);
  rep.meta.emplace_back("config", cfg.dump());
  {
    const bool independent = mode == "independent";
    BasisOptions opts = parse_options(cfg, independent);
    rep.meta.emplace_back("spline_order", std::to_string(opts.spline_order));
    rep.meta.emplace_back("spline_intervals",
                          std::to_string(opts.mesh.intervals));
    rep.meta.emplace_back(
        "mesh", opts.mesh.kind == MeshKind::Graded ? "graded" : "uniform");
    rep.meta.emplace_back("sign_convention",
                          "weight w = -Ctilde >= 0; rho >= 0 kept; "
                          "eigenvector sign: positive slope at alpha=0");
  }

  if (mode == "bound")
    run_bound(cfg, rep, false, summary);
  else if (mode == "independent")
    run_bound(cfg, rep, true, summary);
  else if (mode == "resonance")
    run_resonance(cfg, rep, summary);
  else if (mode == "oscillator")
    run_oscillator(cfg, rep, summary);
  else
    throw std::invalid_argument("config: unknown mode " + mode);

  if (summary) {
    const auto dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::ostringstream os;
    os << "mode " << mode << " finished in " << fmt(dt) << " s, "
       << rep.rows.size() << " rows\n";
    *summary += os.str();
  }
  return rep;
}

std::vector<std::string> compare_report(const Report& report,
                                        const std::string& table_json,
                                        bool* all_pass) {
  const json table = json::parse(table_json);
  std::vector<std::string> lines;
  bool ok = true;
  for (const auto& r : table.at("rows")) {
    const std::string type = r.value("type", "scan");
    const std::string key = r.at("key").get<std::string>();
    const int col = r.value("col", 0);
    const double expected = r.at("expected").get<double>();
    const ReportRow* row = report.find(type, key);
    std::ostringstream os;
    if (!row || col >= static_cast<int>(row->values.size())) {
      os << "FAIL\t" << type << ":" << key << "\tmissing row/column";
      ok = false;
      lines.push_back(os.str());
      continue;
    }
    double got = row->values[col];
    if (r.value("abs", false)) got = std::abs(got);
    const double dev = got - expected;
    bool pass;
    if (r.contains("rel_tol"))
      pass = std::abs(dev) <= r["rel_tol"].get<double>() * std::abs(expected);
    else
      pass = std::abs(dev) <= r.value("tol", 1e-6);
    if (!pass) ok = false;
    os << (pass ? "PASS" : "FAIL") << "\t" << type << ":" << key << "\tcol"
       << col << "\texpected " << fmt(expected) << "\tgot " << fmt(got)
       << "\tdev " << fmt(dev);
    if (r.contains("note")) os << "\t" << r["note"].get<std::string>();
    lines.push_back(os.str());
  }
  if (all_pass) *all_pass = ok;
  return lines;
}

std::string plotdata(const std::string& config_json) {
  const json cfg = json::parse(config_json);
  const std::string kind = cfg.at("plot").get<std::string>();
  std::ostringstream os;

  if (kind == "ctilde") {
    const auto zs = cfg.at("calZ_list").get<std::vector<double>>();
    const bool v0 = cfg.value("include_v0", true);
    const int n = cfg.value("grid_points", 400);
    os << "# alpha";
    for (double z : zs) os << "\tctilde_calZ=" << fmt(z);
    os << "\n";
    for (int i = 0; i < n; ++i) {
      const double a = (i + 0.5) * (M_PI / 2.0) / n;  // endpoints excluded
      os << fmt(a);
      for (double z : zs) os << "\t" << fmt(ctilde({z, v0}, a));
      os << "\n";
    }
    return os.str();
  }

  if (kind == "functions") {
    const int l1 = cfg.value("l1", 0), l2 = cfg.value("l2", 0);
    const double calZ = cfg.value("calZ", 0.5);
    const auto idx = cfg.at("indices").get<std::vector<int>>();
    const bool with_jacobi = cfg.value("jacobi", true);
    BasisOptions opts = parse_options(cfg, false);
    BsplineBasis basis(opts.spline_order, opts.mesh);
    auto quad = basis.quadrature(opts.quad_nodes > 0 ? opts.quad_nodes
                                                     : opts.spline_order + 6);
    const int nkeep = *std::max_element(idx.begin(), idx.end()) + 1;
    auto fam = solve_hyperangular(l1, l2, l1 + l2, {calZ, opts.include_v0},
                                  basis, quad, nkeep);
    const int n = cfg.value("grid_points", 2000);
    os << "# cos2alpha";
    for (int p : idx) os << "\tH_" << p;
    if (with_jacobi)
      for (int p : idx) os << "\tjacobi_" << p;
    os << "\n";
    for (int i = 0; i < n; ++i) {
      const double a = (i + 0.5) * (M_PI / 2.0) / n;
      os << fmt(std::cos(2.0 * a));
      for (int p : idx) os << "\t" << fmt(family_eval(fam, basis, p, a));
      if (with_jacobi)
        for (int p : idx) os << "\t" << fmt(jacobi_eval(l1, l2, p, a));
      os << "\n";
    }
    return os.str();
  }

  if (kind == "eigencurve") {
    const int l1 = cfg.value("l1", 0), l2 = cfg.value("l2", 0);
    const double calZ = cfg.value("calZ", 0.5);
    const auto sizes = cfg.at("spline_sizes").get<std::vector<int>>();
    const int count = cfg.value("count", 60);
    BasisOptions opts = parse_options(cfg, false);
    std::vector<Eigen::VectorXd> curves;
    for (int n : sizes) {
      MeshSpec mesh{opts.mesh.kind, n};
      BsplineBasis basis(opts.spline_order, mesh);
      auto quad = basis.quadrature(opts.spline_order + 6);
      auto fam = solve_hyperangular(l1, l2, l1 + l2, {calZ, opts.include_v0},
                                    basis, quad,
                                    std::min(count, basis.size() - 2));
      curves.push_back(fam.rho);
    }
    os << "# p";
    for (int n : sizes) os << "\trho_splines=" << n;
    os << "\n";
    for (int p = 0; p < count; ++p) {
      os << p;
      for (const auto& c : curves)
        os << "\t" << (p < c.size() ? fmt(c[p]) : "nan");
      os << "\n";
    }
    return os.str();
  }

  throw std::invalid_argument("plotdata: unknown plot kind " + kind);
}

}  // namespace hysturm
