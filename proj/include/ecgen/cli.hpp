#pragma once

// The `ecgen` command-line front end. run() takes the arguments after the
// program name and writes results to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 usage error, 2 validation/domain error,
// 3 randomness failure.

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecgen/curve.hpp"
#include "ecgen/curve_file.hpp"
#include "ecgen/error.hpp"
#include "ecgen/keygen.hpp"
#include "ecgen/mpint.hpp"
#include "ecgen/point_format.hpp"
#include "ecgen/primality.hpp"
#include "ecgen/scalar_mul.hpp"

namespace ecgen::cli {

// 9 limbs: room for double-width products of fields up to 256 bits.
inline constexpr std::size_t kLimbs = 9;
using Int = MpInt<kLimbs>;
using CliCurve = Curve<kLimbs>;
using Point = AffinePoint<kLimbs>;

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalid = 2, kRandomness = 3 };

namespace detail {

struct Failure {
  int code;
  std::string message;
};

struct CurveOptions {
  std::string name;
  std::string file;

  void attach(CLI::App& sub) {
    auto* by_name = sub.add_option("--curve", name, "bundled curve (p192, smoke17)");
    auto* by_file = sub.add_option("--curve-file", file, "curve parameter file");
    by_name->excludes(by_file);
  }

  CliCurve load() const {
    if (name.empty() && file.empty()) {
      throw Failure{kUsage, "one of --curve or --curve-file is required"};
    }
    if (!name.empty()) {
      try {
        return bundled_curve<kLimbs>(name);
      } catch (const FormatError& e) {
        throw Failure{kUsage, e.what()};
      }
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Failure{kUsage, "cannot read curve file " + file};
    std::ostringstream text;
    text << in.rdbuf();
    try {
      return parse_curve_file<kLimbs>(text.str());
    } catch (const Error& e) {
      throw Failure{kInvalid, file + ": " + e.what()};
    }
  }
};

// Argument text that does not parse is a usage error; values that parse but
// fall outside the curve's field are domain errors.
inline Int parse_hex_arg(const std::string& flag, const std::string& text) {
  try {
    return Int::from_hex(text);
  } catch (const Error& e) {
    throw Failure{kUsage, flag + ": " + e.what()};
  }
}

inline Point parse_point_arg(const std::string& flag, const std::string& text,
                             const CliCurve& curve) {
  if (text == "gen") return curve.generator();
  try {
    return parse_point(text, curve);
  } catch (const ParseError& e) {
    throw Failure{kUsage, flag + ": " + e.what()};
  } catch (const RangeError& e) {
    throw Failure{kUsage, flag + ": " + e.what()};
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic-curve key generation and point arithmetic over GF(p)", "ecgen"};
  app.require_subcommand(1);

  detail::CurveOptions curve_opts;
  std::optional<std::string> seed;
  std::string scalar;
  std::string point;
  std::string mul_point;
  std::string p1;
  std::string p2;
  bool public_key = false;

  auto* keygen = app.add_subcommand("keygen", "generate a keypair");
  curve_opts.attach(*keygen);
  keygen->add_option("--seed", seed, "deterministic seed (hex); testing only");

  auto* mul = app.add_subcommand("mul", "scalar multiplication k*P (Montgomery ladder)");
  curve_opts.attach(*mul);
  mul->add_option("--scalar", scalar, "scalar k (hex)")->required();
  mul->add_option("--point", mul_point, "x,y | gen | infinity")->default_val("gen");

  auto* add_cmd = app.add_subcommand("add", "point addition P1+P2");
  curve_opts.attach(*add_cmd);
  add_cmd->add_option("--p1", p1, "x,y | gen | infinity")->required();
  add_cmd->add_option("--p2", p2, "x,y | gen | infinity")->required();

  auto* dbl = app.add_subcommand("double", "point doubling 2P");
  curve_opts.attach(*dbl);
  dbl->add_option("--point", point, "x,y | gen | infinity")->required();

  auto* neg = app.add_subcommand("negate", "point negation -P");
  curve_opts.attach(*neg);
  neg->add_option("--point", point, "x,y | gen | infinity")->required();

  auto* check = app.add_subcommand("check", "validate the curve, and optionally a point");
  curve_opts.attach(*check);
  check->add_option("--point", point, "x,y | gen | infinity");
  check->add_flag("--public-key", public_key, "also require a valid public key (Q != O, n*Q = O)");

  auto* info = app.add_subcommand("curve-info", "print curve parameters in curve-file form");
  curve_opts.attach(*info);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("ecgen");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ecgen: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const CliCurve curve = curve_opts.load();
    if (keygen->parsed()) {
      KeyPair<kLimbs> kp = [&] {
        if (seed) {
          return generate_keypair(curve,
                                  DeterministicSeed<kLimbs>{detail::parse_hex_arg("--seed", *seed)});
        }
        SystemEntropy entropy;
        return generate_keypair(curve, entropy);
      }();
      out << format_keypair(kp, curve);
    } else if (mul->parsed()) {
      const Int k = detail::parse_hex_arg("--scalar", scalar);
      const Point P = detail::parse_point_arg("--point", mul_point, curve);
      out << format_point(ladder(k, P, curve), curve) << "\n";
    } else if (add_cmd->parsed()) {
      const Point a = detail::parse_point_arg("--p1", p1, curve);
      const Point b = detail::parse_point_arg("--p2", p2, curve);
      out << format_point(curve.add(a, b), curve) << "\n";
    } else if (dbl->parsed()) {
      const Point P = detail::parse_point_arg("--point", point, curve);
      out << format_point(curve.dbl(P), curve) << "\n";
    } else if (neg->parsed()) {
      const Point P = detail::parse_point_arg("--point", point, curve);
      curve.require_on_curve(P);
      out << format_point(curve.negate(P), curve) << "\n";
    } else if (check->parsed()) {
      if (public_key && point.empty()) throw detail::Failure{kUsage, "--public-key requires --point"};
      if (!is_probable_prime(curve.p())) throw detail::Failure{kInvalid, "p is not prime"};
      if (!is_probable_prime(curve.order())) throw detail::Failure{kInvalid, "n is not prime"};
      out << "curve " << curve.name() << " ok\n";
      if (!point.empty()) {
        const Point P = detail::parse_point_arg("--point", point, curve);
        if (!curve.on_curve(P)) throw detail::Failure{kInvalid, "point not on curve"};
        out << "point on curve\n";
        if (public_key) {
          if (!validate_public_key(P, curve)) throw detail::Failure{kInvalid, "invalid public key"};
          out << "public key valid\n";
        }
      }
    } else if (info->parsed()) {
      out << format_curve_file(curve);
    }
  } catch (const detail::Failure& f) {
    err << "ecgen: " << f.message << "\n";
    return f.code;
  } catch (const RandomnessError& e) {
    err << "ecgen: " << e.what() << "\n";
    return kRandomness;
  } catch (const Error& e) {
    err << "ecgen: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}

}  // namespace ecgen::cli
