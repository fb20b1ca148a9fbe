#pragma once

// Command dispatch for the triple_lattice tool. run() is kept separate from
// main() so tests can drive the whole command line in-process.
//
// Exit codes: 0 success, 2 argument error, 3 overflow, 4 not in class C,
// 5 verification discrepancy.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "record_writer.hpp"
#include "triple_lattice/triple_lattice.hpp"

namespace triple_lattice::cli {

enum exit_code : int {
  exit_ok = 0,
  exit_usage = 2,
  exit_overflow = 3,
  exit_not_in_class_c = 4,
  exit_discrepancy = 5,
};

inline int exit_code_for(errc code) {
  switch (code) {
    case errc::overflow: return exit_overflow;
    case errc::not_in_class_c:
    case errc::not_a_triple: return exit_not_in_class_c;
    default: return exit_usage;
  }
}

inline const std::vector<std::string> lattice_fields{"m", "n", "a", "b", "c", "primitive", "d", "e"};
inline const std::vector<std::string> extended_fields{"m", "n", "mu", "a", "b", "c", "primitive", "d", "e"};
inline const std::vector<std::string> classify_fields{"a", "b", "c", "P", "E", "C", "P0",
                                                      "m", "n", "u", "v", "scale"};
inline const std::vector<std::string> verify_fields{
    "c_max", "P", "E", "C", "P0", "P_minus_E", "E_minus_C", "C_minus_P0", "discrepancies"};

inline Record lattice_record(const Triple& t) {
  const LatticeIndex idx = lattice_from_triple(t);
  return {{"m", idx.m},
          {"n", idx.n},
          {"a", t.a()},
          {"b", t.b()},
          {"c", t.c()},
          {"primitive", is_primitive_lattice(idx)},
          {"d", t.c() - t.b()},
          {"e", t.c() - t.a()}};
}

/// Extended-lattice record. m is null when mu is even; primitivity comes
/// from the components since the lattice criterion only covers odd mu.
inline Record extended_record(const Triple& t) {
  const auto p = euclid_params_from_triple(t);
  if (!p) throw error(errc::not_a_triple, t.to_string() + " is not Euclidean");
  const ExtendedIndex idx(p->u - p->v, p->v);
  Value m = std::monostate{};
  if (auto li = idx.lattice()) m = li->m;
  return {{"m", m},
          {"n", idx.n},
          {"mu", idx.mu},
          {"a", t.a()},
          {"b", t.b()},
          {"c", t.c()},
          {"primitive", is_primitive(t)},
          {"d", t.c() - t.b()},
          {"e", t.c() - t.a()}};
}

inline Record classify_record(const ClassReport& r, u64 x, u64 y, u64 z) {
  u64 a = x, b = y, c = z;
  if (r.triple) a = r.triple->a(), b = r.triple->b(), c = r.triple->c();
  Value m = std::monostate{}, n = std::monostate{}, u = std::monostate{}, v = std::monostate{};
  if (r.lattice) m = r.lattice->m, n = r.lattice->n;
  if (r.euclid) u = r.euclid->u, v = r.euclid->v;
  return {{"a", a},       {"b", b},      {"c", c},      {"P", r.in_P}, {"E", r.in_E},
          {"C", r.in_C},  {"P0", r.in_P0}, {"m", m},    {"n", n},      {"u", u},
          {"v", v},       {"scale", maybe(r.scale)}};
}

inline Record verify_record(const ChainReport& r) {
  auto witness = [](const std::optional<Triple>& t) -> Value {
    if (!t) return std::monostate{};
    return t->to_string();
  };
  return {{"c_max", r.c_max},
          {"P", u64{r.count_P}},
          {"E", u64{r.count_E}},
          {"C", u64{r.count_C}},
          {"P0", u64{r.count_P0}},
          {"P_minus_E", witness(r.witness_P_minus_E)},
          {"E_minus_C", witness(r.witness_E_minus_C)},
          {"C_minus_P0", witness(r.witness_C_minus_P0)},
          {"discrepancies", r.discrepancies}};
}

struct CliConfig {
  std::string format_name;  // empty: fall back to environment, then default
  std::optional<u64> c_max;
  std::string mode = "lattice";
  u64 oracle_ceiling = default_oracle_ceiling;
};

/// `env_format` is the value of TRIPLE_LATTICE_FORMAT, or null.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const char* env_format = nullptr) {
  CLI::App app{"Pythagorean triples on the (m, n) lattice", "triple_lattice"};
  app.fallthrough();
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--format", cfg.format_name, "json-lines | csv | table (env TRIPLE_LATTICE_FORMAT)");
  app.add_option("--c-max", cfg.c_max, "inclusive hypotenuse bound");
  app.add_option("--mode", cfg.mode, "lattice | extended (enum only)")
      ->check(CLI::IsMember({"lattice", "extended"}));
  app.add_option("--oracle-ceiling", cfg.oracle_ceiling, "largest bound accepted by verify");

  u64 p1 = 0, p2 = 0, p3 = 0;
  std::string kind;

  auto* gen = app.add_subcommand("gen", "triple at lattice point (m, n)");
  gen->add_option("m", p1)->required();
  gen->add_option("n", p2)->required();

  auto* inv = app.add_subcommand("inv", "lattice point of a class-C triple");
  inv->add_option("a", p1)->required();
  inv->add_option("b", p2)->required();
  inv->add_option("c", p3)->required();

  auto* enumerate = app.add_subcommand("enum", "all class-C (or Euclidean) triples up to --c-max");

  auto* series_cmd = app.add_subcommand("series", "odd(m) or even(n) series up to --c-max");
  series_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"odd", "even"}));
  series_cmd->add_option("index", p1)->required();

  auto* classify_cmd = app.add_subcommand("classify", "membership in P, E, C, P0");
  classify_cmd->add_option("a", p1)->required();
  classify_cmd->add_option("b", p2)->required();
  classify_cmd->add_option("c", p3)->required();

  auto* verify = app.add_subcommand("verify", "check the set chain against the brute-force oracle");

  auto* family = app.add_subcommand("family", "first members of the Pythagorean or Platonic family");
  family->add_option("kind", kind)->required()->check(CLI::IsMember({"pythagorean", "platonic"}));
  family->add_option("count", p1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  std::string format_name = cfg.format_name;
  if (format_name.empty() && env_format && *env_format) format_name = env_format;
  if (format_name.empty()) format_name = "json-lines";
  const auto format = parse_format(format_name);
  if (!format) {
    err << "error: unknown format '" << format_name << "'\n";
    return exit_usage;
  }

  auto require_bound = [&]() -> EnumBound {
    if (!cfg.c_max) throw error(errc::invalid_argument, "--c-max is required");
    return EnumBound(*cfg.c_max);
  };

  try {
    if (*gen) {
      RecordWriter w(*format, out, lattice_fields);
      w.write(lattice_record(triple_from_lattice(LatticeIndex(p1, p2))));
    } else if (*inv) {
      if (p1 == 0 || p2 == 0 || p3 == 0)
        throw error(errc::invalid_argument, "components must be positive");
      const Triple t = canonicalize(Triple(p1, p2, p3));
      RecordWriter w(*format, out, lattice_fields);
      w.write(lattice_record(t));
    } else if (*enumerate) {
      const EnumBound bound = require_bound();
      if (cfg.mode == "extended") {
        RecordWriter w(*format, out, extended_fields);
        for (const Triple& t : extended_enumerate(bound)) w.write(extended_record(t));
      } else {
        RecordWriter w(*format, out, lattice_fields);
        for (const Triple& t : lattice_enumerate(bound)) w.write(lattice_record(t));
      }
    } else if (*series_cmd) {
      const EnumBound bound = require_bound();
      const SeriesId id(kind == "odd" ? SeriesKind::odd : SeriesKind::even, p1);
      RecordWriter w(*format, out, lattice_fields);
      for (const Triple& t : series(id, bound)) w.write(lattice_record(t));
    } else if (*classify_cmd) {
      const ClassReport r = classify(p1, p2, p3);
      RecordWriter w(*format, out, classify_fields);
      w.write(classify_record(r, p1, p2, p3));
    } else if (*verify) {
      const EnumBound bound = require_bound();
      if (!bound.is_valid())
        throw error(errc::invalid_argument, "--c-max must be at least 5 for verify");
      const ChainReport r = verify_chain(bound, cfg.oracle_ceiling);
      RecordWriter w(*format, out, verify_fields);
      w.write(verify_record(r));
      for (const auto& d : r.discrepancies) err << "discrepancy: " << d << '\n';
      if (!r.ok()) return exit_discrepancy;
    } else if (*family) {
      RecordWriter w(*format, out, lattice_fields);
      for (u64 k = 1; k <= p1; ++k)
        w.write(lattice_record(kind == "pythagorean" ? pythagorean_family(k) : platonic_family(k)));
    }
  } catch (const error& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return exit_ok;
}

}  // namespace triple_lattice::cli
