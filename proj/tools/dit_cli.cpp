#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dit/specfun.hpp"
#include "dit/transforms.hpp"
#include "dit/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string function;
  std::string kind;
  std::optional<double> mu;
  std::string n_spec;
  std::string x_grid;
  std::string x_list;
  std::optional<double> tol;
  std::string out;
  std::string format = "csv";
  std::string profile;
  std::optional<int> n_max;
  std::string seq_file;
  std::string coeffs_file;
  std::string eq;
  std::string u_list;
  std::string target;
  std::string part = "re";
  int points = 40;
  double correction_sign = -1.0;
};

struct Row {
  double index = 0.0;  // n, or the grid position for x-indexed rows
  std::optional<double> x;
  double value = 0.0;
  double err_est = 0.0;
  std::string status = "ok";
};

struct Record {
  std::string check_id;
  json params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double err_est = 0.0;
  std::string status;
};

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  const double v = parse_double(s);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw UsageError("not an integer: '" + s + "'");
  return static_cast<int>(v);
}

// "3", "0..5" or "1,3,5".
std::vector<int> parse_n(const std::string& spec) {
  std::vector<int> out;
  for (const std::string& part : split(spec, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(part));
      continue;
    }
    const int lo = parse_int(part.substr(0, dots));
    const int hi = parse_int(part.substr(dots + 2));
    if (hi < lo) throw UsageError("empty n range '" + part + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw UsageError("empty n specification");
  return out;
}

std::vector<double> parse_list(const std::string& spec) {
  std::vector<double> out;
  for (const std::string& part : split(spec, ',')) out.push_back(parse_double(part));
  if (out.empty()) throw UsageError("empty value list");
  return out;
}

// start:stop:step; points start + k step up to stop + step / 2.
std::vector<double> parse_grid(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() != 3) throw UsageError("grid must be start:stop:step");
  const double start = parse_double(parts[0]);
  const double stop = parse_double(parts[1]);
  const double step = parse_double(parts[2]);
  if (!(step > 0.0) || !(stop >= start) || !std::isfinite(stop)) {
    throw UsageError("grid needs step > 0 and stop >= start");
  }
  const double count = std::floor((stop - start) / step + 0.5);
  if (count > 1e6) throw UsageError("grid has too many points");
  std::vector<double> xs;
  for (int k = 0; k <= static_cast<int>(count); ++k) xs.push_back(start + k * step);
  return xs;
}

std::vector<double> x_values(const Options& o, const std::vector<double>& fallback = {}) {
  if (!o.x_grid.empty() && !o.x_list.empty()) throw UsageError("use either --x or --x-grid");
  if (!o.x_grid.empty()) return parse_grid(o.x_grid);
  if (!o.x_list.empty()) return parse_list(o.x_list);
  if (fallback.empty()) throw UsageError("an x grid is required (--x or --x-grid)");
  return fallback;
}

dit::TransformKind parse_kind(const std::string& name, std::optional<double> mu) {
  if (name == "re" || name == "im") {
    if (mu) throw UsageError("--mu applies only to --kind lommel");
    return name == "re" ? dit::TransformKind::re() : dit::TransformKind::im();
  }
  if (name == "lommel") {
    if (!mu) throw UsageError("--kind lommel requires --mu");
    try {
      return dit::TransformKind::lommel(*mu);
    } catch (const dit::DomainError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("--kind must be re, im or lommel");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

std::vector<double> number_array(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) throw UsageError("'" + path + "': " + key + " must be an array");
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw UsageError("'" + path + "': " + key + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

// {kind, mu?, start_index, coeffs}; the kind flag, when given, must agree with the file.
std::pair<dit::TransformKind, dit::CoeffSeq> read_coeffs(const std::string& path, const Options& o) {
  const json j = read_json(path);
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("start_index")) {
    throw UsageError("'" + path + "': expected {kind, mu?, start_index, coeffs}");
  }
  std::string kind_name = o.kind;
  if (j.contains("kind")) {
    const std::string file_kind = j["kind"].get<std::string>();
    if (!kind_name.empty() && kind_name != file_kind) throw UsageError("--kind disagrees with '" + path + "'");
    kind_name = file_kind;
  }
  if (kind_name.empty()) throw UsageError("no kind given in '" + path + "' or on the command line");
  std::optional<double> mu = o.mu;
  if (j.contains("mu") && !j["mu"].is_null()) {
    const double file_mu = j["mu"].get<double>();
    if (mu && *mu != file_mu) throw UsageError("--mu disagrees with '" + path + "'");
    mu = file_mu;
  }
  const dit::TransformKind kind = parse_kind(kind_name, mu);
  if (!j["start_index"].is_number_integer()) throw UsageError("'" + path + "': start_index must be an integer");
  try {
    return {kind, dit::CoeffSeq::make(kind, j["start_index"].get<int>(), number_array(j, "coeffs", path))};
  } catch (const dit::DomainError& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

// "1-cos", "sin", or a file {cos_coeffs, sin_coeffs, parity}.
dit::PeriodicProfile read_profile(const std::string& spec) {
  if (spec == "1-cos") return dit::PeriodicProfile::one_minus_cos();
  if (spec == "sin") return dit::PeriodicProfile::sine();
  const json j = read_json(spec);
  if (!j.is_object()) throw UsageError("'" + spec + "': expected {cos_coeffs, sin_coeffs, parity}");
  dit::PeriodicProfile p =
      dit::PeriodicProfile::from_coeffs(number_array(j, "cos_coeffs", spec), number_array(j, "sin_coeffs", spec));
  if (j.contains("parity")) {
    const std::string parity = j["parity"].get<std::string>();
    const std::string derived = p.parity == dit::Parity::Even ? "even" : (p.parity == dit::Parity::Odd ? "odd" : "none");
    if (parity != derived) throw UsageError("'" + spec + "': parity '" + parity + "' but coefficients are " + derived);
  }
  return p;
}

dit::AdmissibleFunction input_function(const Options& o, const dit::TransformKind& kind) {
  if (!o.profile.empty() && !o.coeffs_file.empty()) throw UsageError("use either --profile or --coeffs");
  try {
    if (!o.profile.empty()) return dit::profile_function(kind, read_profile(o.profile));
    if (!o.coeffs_file.empty()) {
      const auto [file_kind, seq] = read_coeffs(o.coeffs_file, o);
      return dit::synthesized_function(file_kind, seq);
    }
  } catch (const dit::DomainError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("an input function is required (--profile or --coeffs)");
}

std::vector<int> index_range(const Options& o, const dit::TransformKind& kind) {
  if (!o.n_spec.empty() && o.n_max) throw UsageError("use either --n or --n-max");
  if (!o.n_spec.empty()) return parse_n(o.n_spec);
  std::vector<int> ns;
  for (int n = kind.first_index(); n <= o.n_max.value_or(4); ++n) ns.push_back(n);
  return ns;
}

json header(const std::string& command, const json& params) {
  json h;
  h["tool"] = "dit";
  h["version"] = kVersion;
  h["command"] = command;
  h["params"] = params;
  return h;
}

json option_params(const Options& o) {
  json p = json::object();
  if (!o.function.empty()) p["function"] = o.function;
  if (!o.kind.empty()) p["kind"] = o.kind;
  if (o.mu) p["mu"] = *o.mu;
  if (!o.n_spec.empty()) p["n"] = o.n_spec;
  if (o.n_max) p["n_max"] = *o.n_max;
  if (!o.x_grid.empty()) p["x_grid"] = o.x_grid;
  if (!o.x_list.empty()) p["x"] = o.x_list;
  if (o.tol) p["tol"] = *o.tol;
  if (!o.profile.empty()) p["profile"] = o.profile;
  if (!o.coeffs_file.empty()) p["coeffs"] = o.coeffs_file;
  if (!o.seq_file.empty()) p["seq_file"] = o.seq_file;
  if (!o.eq.empty()) p["eq"] = o.eq;
  if (!o.u_list.empty()) p["u"] = o.u_list;
  if (!o.target.empty()) p["target"] = o.target;
  return p;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw UsageError("cannot write '" + o.out + "'");
  out << text;
}

int emit_rows(const Options& o, const std::string& command, const std::vector<Row>& rows) {
  std::ostringstream text;
  if (o.format == "json") {
    json doc;
    doc["header"] = header(command, option_params(o));
    json arr = json::array();
    for (const Row& r : rows) {
      json jr;
      jr["index"] = static_cast<long long>(r.index);
      jr["x"] = r.x ? num(*r.x) : json(nullptr);
      jr["value"] = num(r.value);
      jr["err_est"] = num(r.err_est);
      jr["status"] = r.status;
      arr.push_back(jr);
    }
    doc["rows"] = arr;
    text << doc.dump(2) << "\n";
  } else {
    text << "index,x,value,err_est,status\n";
    for (const Row& r : rows) {
      text << fmt17(r.index) << ',' << (r.x ? fmt17(*r.x) : "") << ',' << fmt17(r.value) << ','
           << fmt17(r.err_est) << ',' << r.status << '\n';
    }
  }
  emit(o, text.str());
  for (const Row& r : rows) {
    if (r.status == "error") return kExitFailure;
  }
  return 0;
}

template <class F>
Row guarded_row(double index, std::optional<double> x, F compute) {
  Row row;
  row.index = index;
  row.x = x;
  try {
    const dit::EvalReport r = compute();
    row.value = r.value;
    row.err_est = r.err_est;
    row.status = r.converged ? "ok" : "inconclusive";
  } catch (const std::exception& e) {
    row.value = std::numeric_limits<double>::quiet_NaN();
    row.err_est = std::numeric_limits<double>::quiet_NaN();
    row.status = "error";
    std::cerr << "row " << fmt17(index) << (x ? " x=" + fmt17(*x) : "") << ": " << e.what() << "\n";
  }
  return row;
}

int cmd_eval(const Options& o) {
  const std::vector<int> ns = parse_n(o.n_spec.empty() ? "0" : o.n_spec);
  const std::vector<double> xs = x_values(o);
  const std::string& fn = o.function;
  std::vector<Row> rows;

  if (fn == "besselj-norm" || fn == "besselk") {
    if (o.mu) throw UsageError("--mu does not apply to " + fn);
    if (o.part != "re" && o.part != "im") throw UsageError("--part must be re or im");
    for (int n : ns) {
      for (double x : xs) {
        rows.push_back(guarded_row(n, x, [&] {
          dit::EvalReport r;
          if (fn == "besselk") {
            r.value = dit::bessel_k_imag(n, x);
            // The trapezoid sum stops at 1e-14 of its absolute mass, which is K_0(x).
            r.err_est = 1e-14 * dit::bessel_k_imag(0, x);
          } else {
            const dit::NormalizedBesselJ j = dit::bessel_j_imag_normalized(n, x);
            if (o.part == "im" && !j.im_part) throw dit::DomainError("im_part requires n >= 1");
            r.value = o.part == "im" ? *j.im_part : j.re_part;
            r.err_est = j.err_est;
          }
          r.converged = true;
          return r;
        }));
      }
    }
  } else if (fn == "lommel-s") {
    if (!o.mu) throw UsageError("lommel-s requires --mu");
    if (!(*o.mu > -1.25 && *o.mu < 0.75)) throw UsageError("lommel-s: mu must lie in (-5/4, 3/4)");
    double x_min = std::numeric_limits<double>::infinity();
    for (double x : xs) {
      if (x > 0.0) x_min = std::min(x_min, x);
    }
    for (int n : ns) {
      std::optional<dit::LommelS> table;
      if (n >= 1 && std::isfinite(x_min)) table.emplace(*o.mu, n, x_min);
      for (double x : xs) {
        rows.push_back(guarded_row(n, x, [&] {
          if (!table) throw dit::DomainError("lommel-s requires n >= 1");
          if (!(x > 0.0)) throw dit::DomainError("x must be positive");
          const dit::LommelValue s = (*table)(x);
          dit::EvalReport r;
          r.value = s.value;
          r.err_est = s.err_est;
          r.converged = true;
          return r;
        }));
      }
    }
  } else if (fn == "kernel-phi" || fn == "kernel-psi" || fn == "kernel-omega") {
    const dit::TransformKind kind =
        parse_kind(fn == "kernel-phi" ? "re" : (fn == "kernel-psi" ? "im" : "lommel"), o.mu);
    for (int n : ns) {
      for (double x : xs) rows.push_back(guarded_row(n, x, [&] { return dit::kernel(kind, n, x); }));
    }
  } else {
    throw UsageError("unknown function '" + fn + "'");
  }
  return emit_rows(o, "eval " + fn, rows);
}

int cmd_transform(const std::string& sub, const Options& o) {
  std::vector<Row> rows;
  if (sub == "synth" || sub == "invert-fn") {
    if (o.coeffs_file.empty()) throw UsageError(sub + " requires --coeffs");
    const auto [kind, seq] = read_coeffs(o.coeffs_file, o);
    const std::vector<double> xs = x_values(o);
    std::optional<dit::AdmissibleFunction> f;
    if (sub == "synth") {
      try {
        f = dit::synthesized_function(kind, seq);
      } catch (const dit::DomainError& e) {
        throw UsageError(e.what());
      }
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double x = xs[i];
      rows.push_back(guarded_row(static_cast<double>(i), x, [&] {
        if (!(x > 0.0)) throw dit::DomainError("x must be positive");
        if (sub == "invert-fn") return dit::invert_to_function(kind, seq, x, o.correction_sign);
        dit::EvalReport r = dit::synthesize(kind, seq, x);
        r.converged = true;
        return r;
      }));
    }
  } else if (sub == "analyze" || sub == "invert-seq") {
    if (o.kind.empty()) throw UsageError(sub + " requires --kind");
    // A coefficient file may supply mu.
    const dit::TransformKind kind =
        o.coeffs_file.empty() ? parse_kind(o.kind, o.mu) : read_coeffs(o.coeffs_file, o).first;
    const dit::AdmissibleFunction f = input_function(o, kind);
    dit::QuadConfig cfg = dit::transform_config();
    if (o.tol) {
      cfg.abs_tol = *o.tol;
      cfg.rel_tol = *o.tol;
    }
    for (int n : index_range(o, kind)) {
      rows.push_back(guarded_row(n, std::nullopt, [&] {
        return sub == "analyze" ? dit::analyze(kind, f, n, cfg) : dit::invert_to_sequence(kind, f, n, cfg);
      }));
    }
  } else {
    throw UsageError("unknown transform subcommand '" + sub + "'");
  }
  return emit_rows(o, "transform " + sub, rows);
}

// ---- verify ----

Record identity_record(const dit::IdentityCheck& c) {
  Record r;
  r.check_id = dit::identity_name(c.id);
  r.params["n"] = c.n;
  if (c.id == dit::IdentityId::Eq2_8 || c.id == dit::IdentityId::Eq2_25) {
    r.params["x"] = c.u;
  } else {
    r.params["u"] = c.u;
  }
  if (c.mu) r.params["mu"] = *c.mu;
  r.params["tol"] = c.tol;
  r.lhs = c.lhs;
  r.rhs = c.rhs;
  r.abs_err = c.abs_err;
  r.err_est = c.lhs_err_est;
  r.status = dit::status_name(c.status);
  return r;
}

Record error_record(const std::string& id, json params, const std::exception& e) {
  Record r;
  r.check_id = id;
  params["error"] = e.what();
  r.params = std::move(params);
  r.lhs = r.rhs = r.abs_err = r.err_est = std::numeric_limits<double>::quiet_NaN();
  r.status = "fail";
  return r;
}

struct IdentityGrid {
  dit::IdentityId id;
  std::vector<int> ns;
  std::vector<double> us;
  std::vector<double> mus;
};

std::vector<IdentityGrid> default_identity_grids() {
  const std::vector<double> u5 = {0.5, 1.0, 2.0, 3.0, dit::kPi};
  return {
      {dit::IdentityId::Eq2_4, {0, 1, 2, 3, 4, 5}, u5, {}},
      {dit::IdentityId::Eq2_24, {1, 2, 3, 4, 5}, u5, {}},
      {dit::IdentityId::Eq2_30, {1, 2, 3, 4}, {0.5, 1.0, 2.0}, {-0.5, -1.0}},
      {dit::IdentityId::LaplaceK, {1, 2, 3, 4, 5}, {0.5, 1.0, 2.0, 3.0}, {}},
      {dit::IdentityId::Eq2_8, {0, 1, 2, 3, 4, 5}, {0.5, 1.0, 2.0, 5.0, 10.0}, {}},
      {dit::IdentityId::Eq2_25, {1, 2, 3, 4, 5}, {0.5, 1.0, 2.0, 5.0, 10.0}, {}},
  };
}

dit::IdentityId parse_eq(const std::string& s) {
  if (s == "2.4") return dit::IdentityId::Eq2_4;
  if (s == "2.24") return dit::IdentityId::Eq2_24;
  if (s == "2.30") return dit::IdentityId::Eq2_30;
  if (s == "laplace-k") return dit::IdentityId::LaplaceK;
  if (s == "2.8") return dit::IdentityId::Eq2_8;
  if (s == "2.25") return dit::IdentityId::Eq2_25;
  throw UsageError("--eq must be one of 2.4, 2.24, 2.30, laplace-k, 2.8, 2.25");
}

void verify_identities(const Options& o, std::vector<Record>& out) {
  std::vector<IdentityGrid> grids = default_identity_grids();
  if (!o.eq.empty()) {
    const dit::IdentityId id = parse_eq(o.eq);
    std::erase_if(grids, [id](const IdentityGrid& g) { return g.id != id; });
  }
  for (IdentityGrid& g : grids) {
    if (!o.n_spec.empty()) g.ns = parse_n(o.n_spec);
    if (!o.u_list.empty()) g.us = parse_list(o.u_list);
    if (g.id == dit::IdentityId::Eq2_30 && o.mu) g.mus = {*o.mu};
    const std::vector<std::optional<double>> mus =
        g.mus.empty() ? std::vector<std::optional<double>>{std::nullopt}
                      : std::vector<std::optional<double>>(g.mus.begin(), g.mus.end());
    for (const auto& mu : mus) {
      for (int n : g.ns) {
        for (double u : g.us) {
          try {
            out.push_back(identity_record(dit::check_kernel_identity(g.id, n, u, mu, o.tol)));
          } catch (const std::exception& e) {
            json p{{"n", n}, {"u", u}};
            if (mu) p["mu"] = *mu;
            out.push_back(error_record(dit::identity_name(g.id), p, e));
          }
        }
      }
    }
  }
}

void verify_bounds(const Options& o, std::vector<Record>& out) {
  std::vector<dit::BoundTarget> targets = {dit::BoundTarget::Lebedev_2_34, dit::BoundTarget::Lommel_2_33,
                                           dit::BoundTarget::TheoremProof_JBound};
  if (!o.target.empty()) {
    if (o.target == "lebedev") {
      targets = {dit::BoundTarget::Lebedev_2_34};
    } else if (o.target == "lommel") {
      targets = {dit::BoundTarget::Lommel_2_33};
    } else if (o.target == "jbound") {
      targets = {dit::BoundTarget::TheoremProof_JBound};
    } else {
      throw UsageError("--target for bounds must be lebedev, lommel or jbound");
    }
  }
  for (dit::BoundTarget t : targets) {
    dit::BoundGrid g = dit::default_bound_grid(t);
    if (!o.n_spec.empty()) g.n_values = parse_n(o.n_spec);
    if (o.mu) g.mu = *o.mu;
    g.points = o.points;
    json p{{"n", g.n_values}, {"x_lo", g.x_lo}, {"x_hi", g.x_hi}, {"points", g.points}};
    if (t == dit::BoundTarget::Lommel_2_33) p["mu"] = g.mu;
    try {
      const dit::BoundReport rep = dit::check_bounds(t, g);
      p["points_refined"] = rep.points_refined;
      p["rel_change"] = rep.rel_change;
      p["argmax_n"] = rep.argmax_n;
      p["argmax_x"] = rep.argmax_x;
      Record r;
      r.check_id = dit::bound_name(t);
      r.params = p;
      r.lhs = rep.sup_refined;
      r.rhs = rep.sup;
      r.abs_err = std::abs(rep.sup_refined - rep.sup);
      r.err_est = r.abs_err;
      r.status = dit::status_name(rep.status);
      out.push_back(r);
    } catch (const std::exception& e) {
      out.push_back(error_record(dit::bound_name(t), p, e));
    }
  }
}

void verify_ode(const Options& o, std::vector<Record>& out) {
  std::vector<dit::OdeTarget> targets = {dit::OdeTarget::BesselJ_1_7, dit::OdeTarget::Lommel_1_20};
  if (!o.target.empty()) {
    if (o.target == "bessel") {
      targets = {dit::OdeTarget::BesselJ_1_7};
    } else if (o.target == "lommel") {
      targets = {dit::OdeTarget::Lommel_1_20};
    } else {
      throw UsageError("--target for ode must be bessel or lommel");
    }
  }
  const std::vector<double> xs = o.x_list.empty() ? std::vector<double>{1.0, 2.0, 5.0} : parse_list(o.x_list);
  for (dit::OdeTarget t : targets) {
    const bool lommel = t == dit::OdeTarget::Lommel_1_20;
    const std::vector<int> ns = o.n_spec.empty() ? parse_n(lommel ? "1..3" : "0..3") : parse_n(o.n_spec);
    const std::optional<double> mu = lommel ? std::optional<double>(o.mu.value_or(-0.5)) : std::nullopt;
    for (int n : ns) {
      for (double x : xs) {
        json p{{"n", n}, {"x", x}};
        if (mu) p["mu"] = *mu;
        try {
          const dit::OdeReport rep = dit::check_ode_residual(t, n, mu, x);
          p["steps"] = rep.steps;
          p["residuals"] = rep.residuals;
          p["orders"] = rep.orders;
          Record r;
          r.check_id = dit::ode_name(t);
          r.params = p;
          r.lhs = rep.residuals.back();
          r.rhs = 0.0;
          r.abs_err = rep.residuals.back();
          r.err_est = rep.residuals.back();
          r.status = dit::status_name(rep.status);
          out.push_back(r);
        } catch (const std::exception& e) {
          out.push_back(error_record(dit::ode_name(t), p, e));
        }
      }
    }
  }
}

void roundtrip_records(const dit::RoundtripReport& rep, double correction_sign, std::vector<Record>& out) {
  const bool seq = rep.direction == dit::RoundtripDirection::Seq;
  const std::string id = std::string("roundtrip_") + (seq ? "seq_" : "fn_") + rep.kind.name();
  for (const dit::RoundtripItem& item : rep.items) {
    Record r;
    r.check_id = id;
    if (seq) {
      r.params["n"] = static_cast<int>(item.index);
    } else {
      r.params["x"] = item.index;
    }
    if (rep.kind.tag == dit::KindTag::Lommel) r.params["mu"] = rep.kind.mu;
    r.params["tol"] = rep.tol;
    r.lhs = item.recovered;
    r.rhs = item.expected;
    r.abs_err = item.err;
    r.err_est = item.err;
    r.status = item.err <= rep.tol ? "pass" : (item.converged ? "fail" : "inconclusive");
    out.push_back(r);
  }
  if (!seq && rep.kind.tag != dit::KindTag::Lommel) {
    Record r;
    r.check_id = id + "_sign";
    r.params["correction_sign"] = correction_sign;
    r.lhs = rep.resolved_sign;
    r.rhs = correction_sign;
    r.abs_err = std::abs(rep.resolved_sign - correction_sign);
    r.err_est = 0.0;
    r.status = rep.resolved_sign == correction_sign ? "pass" : "fail";
    out.push_back(r);
  }
}

std::vector<double> cubic_decay(int first, int last) {
  std::vector<double> a;
  for (int n = first; n <= last; ++n) {
    const double m = first == 0 ? n + 1.0 : static_cast<double>(n);
    a.push_back(1.0 / (m * m * m));
  }
  return a;
}

void verify_roundtrip(const Options& o, std::vector<Record>& out) {
  const double tol = o.tol.value_or(1e-4);
  const std::vector<double> grid = {0.5, 1.0, 2.0, 5.0, 10.0};
  const auto run_seq = [&](const dit::TransformKind& kind, const dit::CoeffSeq& a) {
    try {
      roundtrip_records(dit::run_roundtrip_seq(kind, a, tol), o.correction_sign, out);
    } catch (const std::exception& e) {
      out.push_back(error_record("roundtrip_seq_" + kind.name(), json::object(), e));
    }
  };
  const auto run_fn = [&](const dit::TransformKind& kind, const dit::PeriodicProfile& psi) {
    try {
      roundtrip_records(
          dit::run_roundtrip_fn(kind, psi, x_values(o, grid), o.n_max.value_or(4), tol, o.correction_sign),
          o.correction_sign, out);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      out.push_back(error_record("roundtrip_fn_" + kind.name(), json::object(), e));
    }
  };

  if (!o.seq_file.empty() || !o.profile.empty()) {
    if (!o.seq_file.empty() && !o.profile.empty()) throw UsageError("use either --seq-file or --profile");
    if (!o.seq_file.empty()) {
      const auto [kind, seq] = read_coeffs(o.seq_file, o);
      run_seq(kind, seq);
      return;
    }
    if (o.kind.empty()) throw UsageError("--profile requires --kind");
    run_fn(parse_kind(o.kind, o.mu), read_profile(o.profile));
    return;
  }

  const bool all = o.kind.empty();
  if (all || o.kind == "re") {
    const auto k = dit::TransformKind::re();
    run_seq(k, dit::CoeffSeq::make(k, 0, cubic_decay(0, 8)));
    run_fn(k, dit::PeriodicProfile::one_minus_cos());
  }
  if (all || o.kind == "im") {
    const auto k = dit::TransformKind::im();
    run_seq(k, dit::CoeffSeq::make(k, 1, cubic_decay(1, 8)));
    run_fn(k, dit::PeriodicProfile::one_minus_cos());
  }
  if (all || o.kind == "lommel") {
    const auto k = parse_kind("lommel", o.mu.value_or(-0.5));
    run_seq(k, dit::CoeffSeq::make(k, 1, {1.0}));
    run_seq(k, dit::CoeffSeq::make(k, 1, {1.0, 1.0 / 8.0, 1.0 / 27.0}));
    run_fn(k, dit::PeriodicProfile::sine());
  }
  if (!all && o.kind != "re" && o.kind != "im" && o.kind != "lommel") {
    throw UsageError("--kind must be re, im or lommel");
  }
}

int cmd_verify(const std::string& suite, const Options& o) {
  std::vector<Record> records;
  if (suite == "identities") {
    verify_identities(o, records);
  } else if (suite == "bounds") {
    verify_bounds(o, records);
  } else if (suite == "ode") {
    verify_ode(o, records);
  } else if (suite == "roundtrip") {
    verify_roundtrip(o, records);
  } else if (suite == "all") {
    Options d;
    d.tol = o.tol;
    d.points = o.points;
    verify_identities(d, records);
    verify_bounds(d, records);
    verify_ode(d, records);
    verify_roundtrip(d, records);
  } else {
    throw UsageError("unknown verify suite '" + suite + "'");
  }

  int failed = 0;
  int inconclusive = 0;
  for (const Record& r : records) {
    failed += r.status == "fail";
    inconclusive += r.status == "inconclusive";
  }
  std::ostringstream text;
  if (o.format == "csv") {
    text << "check_id,params,lhs,rhs,abs_err,err_est,status\n";
    for (const Record& r : records) {
      std::string params = r.params.dump();
      std::string quoted;
      for (char c : params) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      text << r.check_id << ",\"" << quoted << "\"," << fmt17(r.lhs) << ',' << fmt17(r.rhs) << ','
           << fmt17(r.abs_err) << ',' << fmt17(r.err_est) << ',' << r.status << '\n';
    }
  } else {
    json doc;
    json params = option_params(o);
    doc["header"] = header("verify " + suite, params);
    doc["summary"] = {{"checks", records.size()}, {"failed", failed}, {"inconclusive", inconclusive}};
    json arr = json::array();
    for (const Record& r : records) {
      arr.push_back({{"check_id", r.check_id},
                     {"params", r.params},
                     {"lhs", num(r.lhs)},
                     {"rhs", num(r.rhs)},
                     {"abs_err", num(r.abs_err)},
                     {"err_est", num(r.err_est)},
                     {"status", r.status}});
    }
    doc["checks"] = arr;
    text << doc.dump(2) << "\n";
  }
  emit(o, text.str());
  std::cerr << records.size() << " checks, " << failed << " failed, " << inconclusive << " inconclusive\n";
  return failed == 0 ? 0 : kExitFailure;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--kind", o.kind, "Transform kind: re, im or lommel");
  app->add_option("--mu", o.mu, "Lommel parameter mu");
  app->add_option("--n", o.n_spec, "Index: int, a..b range or comma list");
  app->add_option("--x-grid", o.x_grid, "Grid start:stop:step");
  app->add_option("--x", o.x_list, "Comma-separated x values");
  app->add_option("--tol", o.tol, "Tolerance override");
  app->add_option("--out", o.out, "Output path (default stdout)");
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete index transforms with Bessel and Lommel kernels"};
  app.require_subcommand(1);
  Options o;
  std::string transform_sub;
  std::string verify_suite;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a special function or kernel on a grid");
  eval->add_option("function", o.function,
                   "besselj-norm, besselk, lommel-s, kernel-phi, kernel-psi or kernel-omega")
      ->required();
  add_common(eval, o);
  eval->add_option("--part", o.part, "besselj-norm component: re or im");

  CLI::App* transform = app.add_subcommand("transform", "Forward transforms and inversions");
  transform->add_option("subcommand", transform_sub, "synth, analyze, invert-seq or invert-fn")->required();
  add_common(transform, o);
  transform->add_option("--coeffs", o.coeffs_file, "Coefficient file {kind, mu?, start_index, coeffs}");
  transform->add_option("--profile", o.profile, "\"1-cos\", \"sin\" or a profile file");
  transform->add_option("--n-max", o.n_max, "Largest index (default 4)");
  transform->add_option("--correction-sign", o.correction_sign, "Sign of the a_0 correction term");

  CLI::App* verify = app.add_subcommand("verify", "Run verification checks and write a report");
  verify->add_option("suite", verify_suite, "identities, bounds, ode, roundtrip or all")->required();
  add_common(verify, o);
  verify->add_option("--eq", o.eq, "Identity: 2.4, 2.24, 2.30, laplace-k, 2.8 or 2.25");
  verify->add_option("--u", o.u_list, "Comma-separated u values");
  verify->add_option("--target", o.target, "bounds: lebedev, lommel, jbound; ode: bessel, lommel");
  verify->add_option("--points", o.points, "Bound grid points per n");
  verify->add_option("--seq-file", o.seq_file, "Coefficient file for a sequence roundtrip");
  verify->add_option("--profile", o.profile, "Profile for a function roundtrip");
  verify->add_option("--n-max", o.n_max, "Largest analyzed index in function roundtrips");
  verify->add_option("--correction-sign", o.correction_sign, "Sign of the a_0 correction term");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  bool verify_json = false;
  if (verify->parsed() && verify->count("--format") == 0) verify_json = true;
  if (verify_json) o.format = "json";

  try {
    if (eval->parsed()) return cmd_eval(o);
    if (transform->parsed()) return cmd_transform(transform_sub, o);
    return cmd_verify(verify_suite, o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
