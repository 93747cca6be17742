// mdir: batch front-end for the multiple-Dirichlet-convolution library.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 domain
// error (not a unit / pole guard / out of region). Errors are reported as
// JSON on stderr.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdir/mdir.hpp"
#include "mdir/verify.hpp"

namespace {

using mdir::ArithFunction;
using mdir::Box;
using mdir::ComplexVec;
using mdir::InputError;
using mdir::OrderedJson;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDomainError = 3;

void print_error(const std::string& type, const std::string& message) {
  OrderedJson err;
  err["error"] = {{"type", type}, {"message", message}};
  std::cerr << err.dump() << "\n";
}

Box parse_box(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("box must be cube:T or product:T");
  const std::string mode = text.substr(0, colon);
  const std::int64_t limit = std::strtoll(text.c_str() + colon + 1, nullptr, 10);
  if (limit < 1) throw InputError("box limit must be positive");
  if (mode == "cube") return Box::cube(static_cast<std::uint64_t>(limit));
  if (mode == "product") return Box::product(static_cast<std::uint64_t>(limit));
  throw InputError("unknown box mode: " + mode);
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("empty component in list: " + text);
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw InputError("malformed number: " + item);
  }
  if (out.empty()) throw InputError("empty list: " + text);
  return out;
}

// "re,im;re,im;..." with both parts required per coordinate.
ComplexVec parse_point(const std::string& text) {
  ComplexVec out;
  std::stringstream ss(text);
  std::string coord;
  while (std::getline(ss, coord, ';')) {
    const auto parts = parse_reals(coord);
    if (parts.size() != 2) throw InputError("each coordinate needs re,im: " + coord);
    out.emplace_back(parts[0], parts[1]);
  }
  if (out.empty()) throw InputError("empty evaluation point");
  return out;
}

// Operand resolution shared by the function-valued subcommands: files first,
// then builtins, in the order given. Builtins materialize on --box when
// given, otherwise on the per-command fallback (cube:T for eval, product:60
// elsewhere).
struct OperandSpec {
  std::vector<std::string> files;
  std::vector<std::string> builtins;
  int k = 0;
  std::string box_text;

  void attach(CLI::App* cmd) {
    cmd->add_option("--file", files, "function file (JSON)");
    cmd->add_option("--builtin", builtins,
                    "builtin name: identity_I, ones, u_EZ, u_star, u_MT, u_AV");
    cmd->add_option("--k", k, "arity for builtins");
    cmd->add_option("--box", box_text,
                    "materialization box, cube:T or product:T (default: product:60; "
                    "eval defaults to cube:T)");
  }

  std::vector<ArithFunction> resolve(std::size_t expected, const Box& fallback_box) const {
    std::vector<ArithFunction> out;
    for (const auto& path : files) out.push_back(mdir::read_function_file(path));
    if (!builtins.empty()) {
      if (k < 1) throw InputError("--k is required with --builtin");
      const Box box = box_text.empty() ? fallback_box : parse_box(box_text);
      for (const auto& name : builtins)
        out.push_back(mdir::builtin(mdir::builtin_from_string(name), k, box));
    }
    if (out.size() != expected)
      throw InputError("expected " + std::to_string(expected) + " operand(s), got " +
                       std::to_string(out.size()));
    for (const auto& f : out)
      if (f.arity() != out.front().arity()) throw InputError("operand arity mismatch");
    return out;
  }

  Box result_box(const std::vector<ArithFunction>& ops) const {
    if (!box_text.empty()) return parse_box(box_text);
    Box box = ops.front().box();
    for (const auto& f : ops) box = Box::intersect(box, f.box());
    return box;
  }
};

void write_output(const ArithFunction& f, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << mdir::function_to_json(f).dump() << "\n";
  } else {
    mdir::write_function_file(f, path);
  }
}

OrderedJson complex_json(std::complex<double> z) {
  return OrderedJson::array({z.real(), z.imag()});
}

OrderedJson point_json(const ComplexVec& s) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& z : s) arr.push_back(complex_json(z));
  return arr;
}

int run(int argc, char** argv) {
  CLI::App app{"ring operations, certified series evaluation and region checks "
               "for multiple arithmetic functions"};
  app.require_subcommand(1);

  // --- convolve / add / divide -------------------------------------------
  OperandSpec conv_spec, add_spec, div_spec;
  std::string conv_out, add_out, div_out;
  auto* conv = app.add_subcommand("convolve", "Dirichlet product of two functions");
  conv_spec.attach(conv);
  conv->add_option("-o,--output", conv_out, "output function file");
  auto* addc = app.add_subcommand("add", "pointwise sum of two functions");
  add_spec.attach(addc);
  addc->add_option("-o,--output", add_out, "output function file");
  auto* divc = app.add_subcommand("divide",
                                  "divide first operand by second (divisor must be a unit)");
  div_spec.attach(divc);
  divc->add_option("-o,--output", div_out, "output function file");

  // --- invert --------------------------------------------------------------
  OperandSpec inv_spec;
  std::string inv_out;
  auto* invc = app.add_subcommand("invert", "Dirichlet inverse of a unit");
  inv_spec.attach(invc);
  invc->add_option("-o,--output", inv_out, "output function file");

  // --- norm ------------------------------------------------------------------
  OperandSpec norm_spec;
  auto* normc = app.add_subcommand("norm", "minimum coordinate product over the support");
  norm_spec.attach(normc);

  // --- alpha -----------------------------------------------------------------
  double alpha_C = 1;
  std::string alpha_r;
  double alpha_f1 = 0;
  int alpha_k = 0;
  auto* alphac = app.add_subcommand("alpha", "search the inverse growth exponent");
  alphac->add_option("--C", alpha_C, "growth constant C")->required();
  alphac->add_option("--r", alpha_r, "growth exponents r_1,...,r_k (default zeros)");
  alphac->add_option("--f1", alpha_f1, "|f(1,...,1)|")->required();
  alphac->add_option("--k", alpha_k, "arity")->required();

  // --- eval ------------------------------------------------------------------
  OperandSpec eval_spec;
  std::string eval_point, eval_r, eval_region, eval_alpha, eval_out;
  std::uint64_t eval_T = 0;
  bool eval_certify = false;
  double eval_C = -1;
  auto* evalc = app.add_subcommand("eval", "truncated series evaluation at a point");
  eval_spec.attach(evalc);
  evalc->add_option("--s", eval_point, "point, re,im per coordinate separated by ';'")
      ->required();
  evalc->add_option("--T", eval_T, "truncation cube side")->required();
  evalc->add_flag("--certify", eval_certify, "attach a certified tail radius");
  evalc->add_option("--C", eval_C, "growth constant for --certify");
  evalc->add_option("--r", eval_r, "growth exponents for --certify (default zeros)");
  evalc->add_option("--check-region", eval_region, "gate: zfr, zfr2, abs or sprime");
  evalc->add_option("--alpha", eval_alpha, "alpha list for zfr/zfr2 gates");
  evalc->add_option("-o,--output", eval_out, "report file (default stdout)");

  // --- region ------------------------------------------------------------------
  std::string region_point, region_alpha, region_check;
  std::uint64_t region_T = 400;
  auto* regionc = app.add_subcommand("region", "membership checks for a point");
  regionc->add_option("--s", region_point, "point, re,im per coordinate separated by ';'")
      ->required();
  regionc->add_option("--alpha", region_alpha, "alpha list for zfr/zfr2");
  regionc->add_option("--check", region_check, "zfr, zfr2, abs or sprime (default: all possible)");
  regionc->add_option("--T", region_T, "truncation for the sprime check");

  // --- verify -------------------------------------------------------------------
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 0;
  std::vector<std::string> verify_fixtures;
  auto* verifyc = app.add_subcommand("verify", "run the property suites");
  verifyc->add_option("--suite", verify_suite, "core, ufd, analysis, series or all");
  verifyc->add_option("--seed", verify_seed, "deterministic seed")->required();
  verifyc->add_option("--fixture", verify_fixtures, "function files validated with the suite");

  // --- export --------------------------------------------------------------------
  std::string export_in, export_out;
  bool export_series = false;
  auto* exportc = app.add_subcommand("export", "export a function file as CSV");
  exportc->add_option("--file", export_in, "function file (JSON)")->required();
  exportc->add_flag("--series", export_series,
                    "emit the prime-position power-series encoding as JSON instead of CSV");
  exportc->add_option("-o,--output", export_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (conv->parsed()) {
    const auto ops = conv_spec.resolve(2, Box::product(60));
    write_output(mdir::convolve(ops[0], ops[1], conv_spec.result_box(ops)), conv_out);
    return kExitOk;
  }

  if (addc->parsed()) {
    const auto ops = add_spec.resolve(2, Box::product(60));
    write_output(mdir::add(ops[0], ops[1]), add_out);
    return kExitOk;
  }

  if (divc->parsed()) {
    const auto ops = div_spec.resolve(2, Box::product(60));
    write_output(mdir::divide_by_unit(ops[0], ops[1], div_spec.result_box(ops)), div_out);
    return kExitOk;
  }

  if (invc->parsed()) {
    const auto ops = inv_spec.resolve(1, Box::product(60));
    write_output(mdir::invert(ops[0], inv_spec.result_box(ops)), inv_out);
    return kExitOk;
  }

  if (normc->parsed()) {
    const auto ops = norm_spec.resolve(1, Box::product(60));
    const auto n = mdir::norm(ops[0]);
    std::cout << n.value << "\n";
    if (n.box_limited)
      print_error("box_limited", "function vanishes on its box; norm is box-local");
    return kExitOk;
  }

  if (alphac->parsed()) {
    if (alpha_k < 1) throw InputError("--k must be positive");
    std::vector<double> r(static_cast<std::size_t>(alpha_k), 0.0);
    if (!alpha_r.empty()) r = parse_reals(alpha_r);
    if (static_cast<int>(r.size()) != alpha_k) throw InputError("--r length must equal --k");
    const auto search = mdir::find_alpha(mdir::GrowthBound{alpha_C, r}, alpha_f1);
    OrderedJson rep;
    rep["alpha"] = search.alpha;
    rep["offset"] = search.offset;
    rep["zeta_product_upper"] = search.zeta_product_upper;
    rep["threshold"] = search.threshold;
    std::cout << rep.dump(1) << "\n";
    return kExitOk;
  }

  if (evalc->parsed()) {
    const auto ops = eval_spec.resolve(1, Box::cube(eval_T));
    const ArithFunction& f = ops[0];
    const ComplexVec s = parse_point(eval_point);
    if (static_cast<int>(s.size()) != f.arity())
      throw InputError("point arity does not match the function");

    OrderedJson region_checks = OrderedJson::object();
    if (!eval_region.empty()) {
      bool pass = false;
      if (eval_region == "abs") {
        pass = mdir::in_chain_convergence_region(s);
      } else if (eval_region == "zfr" || eval_region == "zfr2") {
        if (eval_alpha.empty()) throw InputError("--alpha is required for zfr/zfr2 gates");
        const auto alpha = parse_reals(eval_alpha);
        pass = eval_region == "zfr" ? mdir::in_pointwise_zero_free_region(s, alpha)
                                    : mdir::in_nested_zero_free_region(s, alpha);
      } else if (eval_region == "sprime") {
        const auto verdict = mdir::sprime_membership(s, eval_T);
        pass = verdict == mdir::RegionVerdict::inside;
        region_checks["sprime_verdict"] = verdict == mdir::RegionVerdict::inside ? "inside"
                                          : verdict == mdir::RegionVerdict::outside
                                              ? "outside"
                                              : "uncertain";
      } else {
        throw InputError("unknown region gate: " + eval_region);
      }
      region_checks[eval_region] = pass;
      if (!pass) throw mdir::OutOfRegionError("point rejected by region gate " + eval_region);
    }

    OrderedJson rep;
    rep["s"] = point_json(s);
    rep["T"] = eval_T;
    if (eval_certify) {
      std::vector<double> r(static_cast<std::size_t>(f.arity()), 0.0);
      if (!eval_r.empty()) r = parse_reals(eval_r);
      if (static_cast<int>(r.size()) != f.arity())
        throw InputError("--r length must match the arity");
      double C = eval_C;
      if (C < 0) C = f.name() == "identity_I" ? 0.0 : 1.0;  // indicator defaults
      const auto ev = mdir::eval_certified(f, mdir::GrowthBound{C, r}, s, eval_T);
      rep["value"] = complex_json(ev.value);
      rep["tail_radius"] = ev.tail_radius;
    } else {
      rep["value"] = complex_json(mdir::eval_truncated(f, s, Box::cube(eval_T)));
      rep["tail_radius"] = nullptr;
    }
    rep["region_checks"] = region_checks;
    if (eval_out.empty() || eval_out == "-") {
      std::cout << rep.dump(1) << "\n";
    } else {
      std::ofstream out(eval_out);
      if (!out) throw InputError("cannot open for writing: " + eval_out);
      out << rep.dump(1) << "\n";
    }
    return kExitOk;
  }

  if (regionc->parsed()) {
    const ComplexVec s = parse_point(region_point);
    OrderedJson checks = OrderedJson::object();
    const bool want_all = region_check.empty();
    if (want_all || region_check == "abs")
      checks["abs"] = mdir::in_chain_convergence_region(s);
    if (!region_alpha.empty() && (want_all || region_check == "zfr" || region_check == "zfr2")) {
      const auto alpha = parse_reals(region_alpha);
      if (want_all || region_check == "zfr")
        checks["zfr"] = mdir::in_pointwise_zero_free_region(s, alpha);
      if (want_all || region_check == "zfr2")
        checks["zfr2"] = mdir::in_nested_zero_free_region(s, alpha);
    } else if (!want_all && (region_check == "zfr" || region_check == "zfr2")) {
      throw InputError("--alpha is required for zfr/zfr2 checks");
    }
    if (region_check == "sprime") {
      const auto verdict = mdir::sprime_membership(s, region_T);
      checks["sprime"] = verdict == mdir::RegionVerdict::inside ? "inside"
                         : verdict == mdir::RegionVerdict::outside ? "outside"
                                                                   : "uncertain";
    }
    if (checks.empty()) throw InputError("nothing to check: pass --check and/or --alpha");
    OrderedJson rep;
    rep["s"] = point_json(s);
    rep["region_checks"] = checks;
    std::cout << rep.dump(1) << "\n";
    return kExitOk;
  }

  if (verifyc->parsed()) {
    const auto results = mdir::run_verify_suite(verify_suite, verify_seed, verify_fixtures);
    std::uint64_t failures = 0;
    for (const auto& r : results) {
      std::cout << (r.passed() ? "pass" : "FAIL") << "  " << r.suite << "/" << r.name << "  ("
                << r.cases << " cases, " << r.failures << " failures)\n";
      failures += r.failures;
    }
    if (failures > 0) {
      std::cout << "suite,property,case,detail\n";
      for (const auto& r : results)
        for (const auto& row : r.failure_rows) std::cout << row << "\n";
      return kExitVerifyFailure;
    }
    return kExitOk;
  }

  if (exportc->parsed()) {
    const auto f = mdir::read_function_file(export_in);
    std::ostringstream body;
    if (export_series) {
      const mdir::PrimePositionBasis basis(f.arity());
      body << mdir::series_to_json(mdir::to_power_series(f, basis)).dump() << "\n";
    } else {
      for (int j = 0; j < f.arity(); ++j) body << "n" << (j + 1) << ",";
      body << "value\n";
      for (std::size_t i = 0; i < f.keys().size(); ++i) {
        for (int j = 0; j < f.arity(); ++j) body << f.keys()[i][j] << ",";
        body << mdir::to_fraction_string(f.values()[i]) << "\n";
      }
    }
    if (export_out.empty() || export_out == "-") {
      std::cout << body.str();
    } else {
      std::ofstream out(export_out);
      if (!out) throw InputError("cannot open for writing: " + export_out);
      out << body.str();
    }
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mdir::NotAUnitError& e) {
    print_error("not_a_unit", e.what());
    return kExitDomainError;
  } catch (const mdir::PoleGuardError& e) {
    print_error("pole_guard", e.what());
    return kExitDomainError;
  } catch (const mdir::OutOfRegionError& e) {
    print_error("out_of_region", e.what());
    return kExitDomainError;
  } catch (const mdir::DomainError& e) {
    print_error("domain_error", e.what());
    return kExitDomainError;
  } catch (const mdir::InputError& e) {
    print_error("input_error", e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    print_error("input_error", e.what());
    return kExitInputError;
  }
}
