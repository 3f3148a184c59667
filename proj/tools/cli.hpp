#pragma once

// The wmod command line, kept as a function over argument vectors and streams
// so the test suite can drive it in-process.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wmod/wmod.hpp"

namespace wmod::cli {

enum ExitCode : int { kOk = 0, kDomainError = 2, kIoError = 3 };

struct CommonOptions {
  unsigned m = 2;
  std::string form;
  std::optional<unsigned> degree;
  std::string twist = "1";
  bool json = false;
  std::string store;
};

inline std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw domain_error("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw domain_error("empty list");
  return out;
}

inline std::vector<unsigned> parse_weights(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& s : split_csv(text)) {
    const Integer v(s);
    if (v <= 0 || !v.fits_uint_p()) throw domain_error("weight '" + s + "' is not a positive integer");
    out.push_back(static_cast<unsigned>(v.get_ui()));
  }
  return out;
}

inline std::vector<Rational> parse_coords(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split_csv(text)) out.push_back(parse_rational(s));
  return out;
}

inline SuperellipticCurve curve_from(const CommonOptions& o) {
  if (o.form.empty()) throw domain_error("--form is required");
  Rational twist = parse_rational(o.twist);
  if (!is_integer(twist)) throw domain_error("--twist must be an integer");
  return SuperellipticCurve(o.m, parse_form(o.form, o.degree), twist.get_num());
}

inline nlohmann::json primes_json(const PrimeExponentMap& map) {
  nlohmann::json primes = nlohmann::json::object();
  for (const auto& [p, e] : map.exponents()) primes[p.get_str()] = e.get_str();
  return primes;
}

inline std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

inline std::string factored(const Rational& v) {
  if (v == 0) return "0";
  std::string out = factorize(v.get_num()).str();
  if (v.get_den() != 1) out += "/(" + factorize(v.get_den()).str() + ")";
  return out;
}

inline nlohmann::json height_json(const WeightedHeight& h) {
  return {{"decimal", h.decimal()}, {"argmax_index", h.argmax_index()}, {"log", static_cast<double>(h.log())}};
}

inline nlohmann::json curve_json(const SuperellipticCurve& c) {
  std::vector<std::string> form;
  for (const auto& v : c.form().integer_coeffs()) form.push_back(v.get_str());
  return {{"m", c.m()}, {"d", c.degree()}, {"twist_scalar", c.twist_scalar().get_str()}, {"form", form},
          {"equation", c.str()}};
}

/// The stable response object shared by the curve subcommands.
inline nlohmann::json curve_response(const SuperellipticCurve& curve, const ReductionReport& report) {
  const WeightedPoint point = curve.moduli_point();
  nlohmann::json j = curve_json(curve);
  std::vector<std::string> facts;
  for (const auto& v : point.coords()) facts.push_back(factored(v));
  j["invariants"] = {{"values", strings(point.coords())},
                     {"factored", facts},
                     {"weights", point.weights().weights()},
                     {"names", curve.invariant_system().names}};
  j["wgcd"] = point.is_integral() ? nlohmann::json(wgcd(point).get_str()) : nlohmann::json(nullptr);
  j["minimal"] = is_minimal(curve);
  j["mode"] = to_string(report.mode);
  j["lambda"] = {{"primes", primes_json(report.lambda)}, {"value", report.lambda.str()}};
  j["substitution"] = report.substitution.get_str();
  j["star"] = {{"primes", primes_json(report.star_scalar)}, {"value", report.star_scalar.str()}};
  j["output_point"] = strings(report.output_point.coords());
  const WeightedPoint normalized = normalize(point);
  j["point_normalized"] = strings(normalized.coords());
  j["height"] = height_json(weighted_height(normalized));
  j["defined_over_base"] = report.defined_over_base;
  j["extension_note"] = report.extension_note ? nlohmann::json(*report.extension_note) : nlohmann::json(nullptr);
  j["realized_equation"] =
      report.realized_equation ? curve_json(*report.realized_equation) : nlohmann::json(nullptr);
  j["realized"] = report.realized;
  if (curve.low_degree()) j["warning"] = "degree below 5: compare with the elliptic path";
  return j;
}

inline void print_curve_text(std::ostream& out, const SuperellipticCurve& curve, const ReductionReport& report) {
  const WeightedPoint point = curve.moduli_point();
  const auto names = curve.invariant_system().names;
  out << "curve: " << curve.str() << "\n";
  if (curve.low_degree()) out << "warning: degree below 5\n";
  for (std::size_t i = 0; i < point.size(); ++i)
    out << names[i] << " = " << point[i].get_str() << " = " << factored(point[i]) << "  (weight " << point.weight(i)
        << ")\n";
  if (point.is_integral()) out << "wgcd: " << wgcd(point).get_str() << "\n";
  out << "minimal: " << (is_minimal(curve) ? "yes" : "no") << "\n";
  out << "mode: " << to_string(report.mode) << "\n";
  out << "lambda: " << report.lambda.str() << "  (star scalar " << report.star_scalar.str() << ")\n";
  out << "substitution: x -> x/" << report.substitution.get_str() << "\n";
  out << "output point: " << report.output_point.str() << "\n";
  if (report.realized_equation) out << "equation: " << report.realized_equation->str() << "\n";
  else if (!report.realized) out << "equation: not realizable over Q (point only)\n";
  out << "defined over base: " << (report.defined_over_base ? "yes" : "no") << "\n";
  if (report.extension_note) out << "note: " << *report.extension_note << "\n";
  const WeightedHeight h = weighted_height(point);
  out << "normalized point: " << normalize(point).str() << "\n";
  out << "height: " << h.decimal() << "  (argmax " << names[h.argmax_index()] << ")\n";
}

inline std::string store_path(const CommonOptions& o) {
  if (!o.store.empty()) return o.store;
  if (const char* env = std::getenv("WMOD_STORE")) return env;
  throw io_error("no store given: pass --store or set WMOD_STORE");
}

inline nlohmann::json record_json(const CurveRecord& r) { return to_json(r); }

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted moduli heights, minimal models and minimal twists of superelliptic curves", "wmod"};
  app.require_subcommand(1);
  CommonOptions o;
  auto add_curve_options = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "superelliptic exponent m")->capture_default_str();
    sub->add_option("--form", o.form, "binary form, e.g. \"x^6 + 24*x^5*y + 642*y^6\"");
    sub->add_option("--degree", o.degree, "degree to homogenize univariate input to");
    sub->add_option("--twist", o.twist, "twist scalar c in c*z^m*y^(d-m) = f")->capture_default_str();
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };

  auto* inv = app.add_subcommand("invariants", "moduli point, wgcd and minimality of a curve");
  add_curve_options(inv);
  add_json(inv);

  bool by_discriminant = false;
  auto* minimize = app.add_subcommand("minimize", "minimal model by weighted reduction");
  add_curve_options(minimize);
  add_json(minimize);
  minimize->add_flag("--discriminant", by_discriminant, "minimize the discriminant instead");

  bool integral = false;
  auto* twist = app.add_subcommand("twist", "minimal twist");
  add_curve_options(twist);
  add_json(twist);
  twist->add_flag("--integral", integral, "stay with rational scalars (wgcd normalization)");

  std::string weights_text, point_text;
  std::vector<std::string> positional;
  auto* height = app.add_subcommand("height", "weighted height of a curve or a point");
  add_curve_options(height);
  add_json(height);
  height->add_option("--weights", weights_text, "weights q0,q1,...");
  height->add_option("--point", point_text, "coordinates x0,x1,...");

  auto* wg = app.add_subcommand("wgcd", "weighted gcd, absolute weighted gcd and normalization");
  add_json(wg);
  wg->add_option("--weights", weights_text, "weights q0,q1,...")->required();
  wg->add_option("--point", point_text, "coordinates x0,x1,...");
  wg->add_option("coords", positional, "coordinates");

  std::string a_text;
  auto* laska = app.add_subcommand("laska", "minimal Weierstrass equation of an elliptic curve");
  add_json(laska);
  laska->add_option("--a", a_text, "a1,a2,a3,a4,a6")->required()->allow_extra_args(false);

  auto* db = app.add_subcommand("db", "curve registry");
  db->require_subcommand(1);
  std::string provenance;
  auto* db_add_cmd = db->add_subcommand("add", "register a curve");
  auto* db_find_cmd = db->add_subcommand("find", "look up a curve or point");
  auto* db_list_cmd = db->add_subcommand("list", "list registered curves");
  for (auto* sub : {db_add_cmd, db_find_cmd, db_list_cmd}) {
    sub->add_option("--store", o.store, "store path (default $WMOD_STORE)");
    add_json(sub);
  }
  add_curve_options(db_add_cmd);
  db_add_cmd->add_option("--provenance", provenance, "free-text label");
  add_curve_options(db_find_cmd);
  db_find_cmd->add_option("--weights", weights_text, "weights of --point");
  db_find_cmd->add_option("--point", point_text, "query point");

  std::vector<std::string> argv_store{"wmod"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kDomainError;
    }

    if (*inv || *minimize || *twist) {
      const SuperellipticCurve curve = curve_from(o);
      if (*minimize && by_discriminant) {
        const DiscriminantReduction r = minimize_discriminant(curve);
        if (o.json) {
          nlohmann::json j = curve_json(r.curve);
          j["u"] = r.u.get_str();
          j["u_bound"] = r.bound.get_str();
          j["discriminant_before"] = discriminant(curve.form()).get_str();
          j["discriminant_after"] = discriminant(r.curve.form()).get_str();
          out << j.dump(2) << "\n";
        } else {
          out << "curve: " << r.curve.str() << "\nu: " << r.u.get_str() << "  (bound " << r.bound.get_str()
              << ")\ndiscriminant: " << discriminant(r.curve.form()).get_str() << "\n";
        }
        return kOk;
      }
      const ReductionReport report = *twist ? minimal_twist(curve, integral) : minimal_model(curve);
      if (o.json) out << curve_response(curve, report).dump(2) << "\n";
      else print_curve_text(out, curve, report);
      return kOk;
    }

    if (*height) {
      std::optional<WeightedPoint> point;
      if (!point_text.empty()) {
        if (weights_text.empty()) throw domain_error("--point needs --weights");
        point.emplace(parse_coords(point_text), WeightSystem(parse_weights(weights_text)));
      } else {
        point.emplace(curve_from(o).moduli_point());
      }
      const WeightedHeight h = weighted_height(*point);
      if (o.json) {
        nlohmann::json j = {{"point_normalized", strings(normalize(*point).coords())}, {"height", height_json(h)}};
        out << j.dump(2) << "\n";
      } else {
        out << "normalized point: " << normalize(*point).str() << "\nheight: " << h.decimal()
            << "\nlog height: " << static_cast<double>(h.log()) << "\nargmax index: " << h.argmax_index() << "\n";
      }
      return kOk;
    }

    if (*wg) {
      std::vector<Rational> coords;
      if (!point_text.empty()) coords = parse_coords(point_text);
      for (const auto& s : positional)
        for (auto& c : parse_coords(s)) coords.push_back(c);
      const WeightedPoint point(std::move(coords), WeightSystem(parse_weights(weights_text)));
      const Integer g = wgcd(point);
      const PrimeExponentMap abs = abs_wgcd(point);
      const WeightedPoint normalized = normalize(point);
      if (o.json) {
        nlohmann::json j = {{"wgcd", g.get_str()},
                            {"abs_wgcd", {{"primes", primes_json(abs)}, {"value", abs.str()}}},
                            {"point_normalized", strings(normalized.coords())},
                            {"weights", point.weights().weights()}};
        out << j.dump(2) << "\n";
      } else {
        out << "wgcd: " << g.get_str() << " = " << factored(Rational(g)) << "\nabsolute wgcd: " << abs.str()
            << "\nnormalized point: " << normalized.str() << "\n";
      }
      return kOk;
    }

    if (*laska) {
      const auto parts = split_csv(a_text);
      if (parts.size() != 5) throw domain_error("--a needs exactly five coefficients a1,a2,a3,a4,a6");
      std::vector<Integer> a;
      for (const auto& s : parts) {
        const Rational v = parse_rational(s);
        if (!is_integer(v)) throw domain_error("Weierstrass coefficients must be integers");
        a.push_back(v.get_num());
      }
      const WeierstrassEquation e{a[0], a[1], a[2], a[3], a[4]};
      const LaskaResult r = laska_reduce(e);
      const auto [c4, c6] = c_invariants(e);
      if (o.json) {
        const auto& mdl = r.model;
        nlohmann::json j = {{"input", {e.a1.get_str(), e.a2.get_str(), e.a3.get_str(), e.a4.get_str(), e.a6.get_str()}},
                            {"c4", c4.get_str()},
                            {"c6", c6.get_str()},
                            {"u", r.u.get_str()},
                            {"r", r.r.get_str()},
                            {"s", r.s.get_str()},
                            {"t", r.t.get_str()},
                            {"model",
                             {mdl.a1.get_str(), mdl.a2.get_str(), mdl.a3.get_str(), mdl.a4.get_str(), mdl.a6.get_str()}},
                            {"discriminant_before", e.discriminant().get_str()},
                            {"discriminant", mdl.discriminant().get_str()}};
        out << j.dump(2) << "\n";
      } else {
        out << "c4: " << c4.get_str() << "\nc6: " << c6.get_str() << "\nu: " << r.u.get_str()
            << "\nminimal model: " << r.model.str() << "\ndiscriminant: " << r.model.discriminant().get_str() << " = "
            << factored(Rational(r.model.discriminant())) << "\n";
      }
      return kOk;
    }

    if (*db_add_cmd) {
      const CurveRecord rec = make_record(curve_from(o), provenance);
      const AddResult res = db_add(rec, store_path(o));
      if (o.json) out << nlohmann::json{{"added", res.added}, {"id", res.id}}.dump(2) << "\n";
      else out << (res.added ? "added " : "duplicate-of ") << res.id << "\n";
      return kOk;
    }
    if (*db_find_cmd) {
      std::optional<CurveRecord> hit;
      if (!point_text.empty()) {
        if (weights_text.empty()) throw domain_error("--point needs --weights");
        hit = db_find(WeightedPoint(parse_coords(point_text), WeightSystem(parse_weights(weights_text))),
                      store_path(o));
      } else {
        hit = db_find(curve_from(o), store_path(o));
      }
      if (o.json) out << (hit ? record_json(*hit) : nlohmann::json(nullptr)).dump(2) << "\n";
      else if (hit) out << "found " << hit->id << " " << canonical_key_string(hit->canonical_key) << "\n";
      else out << "not found\n";
      return kOk;
    }
    if (*db_list_cmd) {
      const auto records = db_list(store_path(o));
      if (o.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : records) arr.push_back(record_json(r));
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& r : records)
          out << r.id << "  h=" << r.height_decimal << "  " << canonical_key_string(r.canonical_key) << "\n";
      }
      return kOk;
    }
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kDomainError;
}

}  // namespace wmod::cli
