/**
 * @file affcrys_cli.cpp
 * @brief Command-line front end: generate crystal graphs, export DOT/JSON,
 *        run structural checks and the theorem verifiers.
 *
 * Exit codes: 0 success / verification pass, 1 verification failure or
 * safety-cap overflow, 2 flag or parse errors.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affcrys/affcrys.hpp"

namespace {

using namespace affcrys;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

[[nodiscard]] nlohmann::json parse_json_arg(const std::string& text, const char* what) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw CLI::ValidationError(std::string(what) + ": not valid JSON");
  return j;
}

[[nodiscard]] CrystalGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw CLI::ValidationError(path + ": not valid JSON");
  return CrystalGraph::from_json(j);
}

void emit(const CrystalGraph& g, const std::string& format) {
  if (format == "dot")
    std::cout << g.to_dot();
  else
    std::cout << g.to_json().dump(2) << "\n";
}

/// Column-model highest element (1,...,1,0,...,0).
[[nodiscard]] TupleElement column_highest(const CrystalParams& p, long long r) {
  std::vector<long long> xs(static_cast<std::size_t>(p.n), 0);
  for (long long j = 0; j < r; ++j) xs[static_cast<std::size_t>(j)] = 1;
  return make_column(p, r, xs);
}

/// Comma-separated weight coordinates "c0,c1,...".
[[nodiscard]] Weight parse_lambda(const std::string& text, int n) {
  std::vector<long long> coords;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) coords.push_back(std::stoll(tok));
  if (static_cast<int>(coords.size()) != n)
    throw CLI::ValidationError("--lam needs exactly n coordinates");
  return Weight{coords, 0};
}

/// Shift list "s:k,s:k,...".
[[nodiscard]] std::vector<std::pair<long long, long long>> parse_shifts(const std::string& text) {
  std::vector<std::pair<long long, long long>> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--shifts entries look like s:k");
    out.push_back({std::stoll(tok.substr(0, colon)), std::stoll(tok.substr(colon + 1))});
  }
  if (out.empty()) throw CLI::ValidationError("--shifts must name at least one factor");
  return out;
}

struct GenOptions {
  int n = 0;
  std::string model;
  long long s = 0;
  long long r = 0;
  std::string seed;
  long long depth = -1;
  std::string op = "std";
  std::string format = "json";
};

[[nodiscard]] int run_gen(const GenOptions& o) {
  CrystalParams p = make_params(o.n);
  Limits lim;
  if (o.depth >= 0) lim.max_depth = o.depth;

  auto need_depth = [&] {
    if (o.depth < 0) throw CLI::ValidationError("--depth is required for infinite models");
  };

  CrystalGraph g;
  if (o.model == "kr") {
    if (o.s < 1) throw CLI::ValidationError("--model kr needs --s >= 1");
    TupleElement seed = o.seed.empty() ? kr_highest(p, o.s)
                                       : tuple_from_json(parse_json_arg(o.seed, "--seed"));
    g = closure(KrModel{p, o.s}, {seed}, lim);
  } else if (o.model == "m1s") {
    Monomial seed;
    if (!o.seed.empty())
      seed = mono_from_json(parse_json_arg(o.seed, "--seed"));
    else if (o.s >= 1)
      seed = seed_m1s(p, o.s);
    else
      throw CLI::ValidationError("--model m1s needs --s >= 1 or --seed");
    g = closure(StdMonomialModel{p}, {seed}, lim);
  } else if (o.model == "column") {
    if (o.r < 1) throw CLI::ValidationError("--model column needs --r >= 1");
    TupleElement seed = o.seed.empty() ? column_highest(p, o.r)
                                       : tuple_from_json(parse_json_arg(o.seed, "--seed"));
    if (o.op == "bar")
      g = closure(BarModel{p}, {col_seed_map(p, seed)}, lim);
    else
      g = closure(ColumnModel{p, o.r}, {seed}, lim);
  } else if (o.model == "binf") {
    need_depth();
    TupleElement seed = o.seed.empty()
                            ? make_coherent(p, std::vector<long long>(static_cast<std::size_t>(o.n), 0))
                            : tuple_from_json(parse_json_arg(o.seed, "--seed"));
    g = closure(CoherentTupleModel{p}, {seed}, lim);
  } else if (o.model == "minf") {
    need_depth();
    Monomial seed = o.seed.empty() ? mono_one() : mono_from_json(parse_json_arg(o.seed, "--seed"));
    if (o.op == "coh")
      g = closure(CoherentMonomialModel{p}, {seed}, lim);
    else
      g = closure(DaggerModel{p}, {seed}, lim);
  } else if (o.model == "hw") {
    need_depth();
    if (o.seed.empty()) throw CLI::ValidationError("--model hw needs --seed");
    Monomial seed = mono_from_json(parse_json_arg(o.seed, "--seed"));
    g = closure(StdMonomialModel{p}, {seed}, lim);
  } else {
    throw CLI::ValidationError("unknown --model " + o.model);
  }
  emit(g, o.format);
  return kExitPass;
}

[[nodiscard]] int run_verify(const std::string& theorem, int n, long long s, long long r,
                             const std::string& lam, long long depth, const std::string& shifts,
                             std::optional<long long> level) {
  CrystalParams p = make_params(n);
  VerifyReport rep;
  if (theorem == "3.1") {
    if (s < 1) throw CLI::ValidationError("--theorem 3.1 needs --s >= 1");
    rep = verify_kr_iso(p, s);
  } else if (theorem == "4.1") {
    if (shifts.empty()) throw CLI::ValidationError("--theorem 4.1 needs --shifts");
    rep = verify_shifted_product(p, parse_shifts(shifts));
  } else if (theorem == "4.2") {
    if (lam.empty() || depth < 1)
      throw CLI::ValidationError("--theorem 4.2 needs --lam and --depth");
    rep = verify_kyoto_step(p, parse_lambda(lam, n), depth);
  } else if (theorem == "5.1") {
    if (depth < 1) throw CLI::ValidationError("--theorem 5.1 needs --depth");
    rep = verify_coherent_map(p, depth);
  } else if (theorem == "5.2") {
    if (depth < 1) throw CLI::ValidationError("--theorem 5.2 needs --depth");
    rep = verify_coherent_step(p, depth);
  } else if (theorem == "6.2") {
    if (r < 1) throw CLI::ValidationError("--theorem 6.2 needs --r");
    rep = verify_column(p, r);
  } else if (theorem == "perfect") {
    if (s < 1) throw CLI::ValidationError("--theorem perfect needs --s >= 1");
    rep = verify_perfect(p, s, level.value_or(s));
  } else {
    throw CLI::ValidationError("unknown --theorem " + theorem);
  }
  std::cout << rep.to_json().dump(2) << "\n";
  return rep.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine crystal graphs from Nakajima monomials"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  GenOptions gen;
  CLI::App* cgen = app.add_subcommand("gen", "Generate a crystal graph and print it");
  cgen->add_option("--n", gen.n, "Rank (number of Dynkin nodes)")->required();
  cgen->add_option("--model", gen.model, "kr|m1s|column|binf|minf|hw")->required();
  cgen->add_option("--s", gen.s, "One-row capacity");
  cgen->add_option("--r", gen.r, "Column height");
  cgen->add_option("--seed", gen.seed, "Seed element as JSON");
  cgen->add_option("--depth", gen.depth, "Ball radius for infinite models");
  cgen->add_option("--op", gen.op, "std|dagger|coh|bar (operator family)");
  cgen->add_option("--format", gen.format, "json|dot");

  // ---- tensor ---------------------------------------------------------------
  std::string tfile_a, tfile_b, tformat = "json";
  CLI::App* cten = app.add_subcommand("tensor", "Tensor product of two graph files");
  cten->add_option("fileA", tfile_a)->required();
  cten->add_option("fileB", tfile_b)->required();
  cten->add_option("--format", tformat, "json|dot");

  // ---- iso ------------------------------------------------------------------
  std::string ifile_a, ifile_b;
  CLI::App* ciso = app.add_subcommand("iso", "Decide crystal isomorphism of two graph files");
  ciso->add_option("fileA", ifile_a)->required();
  ciso->add_option("fileB", ifile_b)->required();

  // ---- axioms ---------------------------------------------------------------
  std::string afile;
  bool aregular = false;
  CLI::App* cax = app.add_subcommand("axioms", "Check the crystal axioms on a graph file");
  cax->add_option("file", afile)->required();
  cax->add_flag("--regular", aregular, "Also require the regularity chain conditions");

  // ---- perfect ----------------------------------------------------------------
  std::string pfile;
  long long plevel = 0;
  CLI::App* cperf = app.add_subcommand("perfect", "Run the perfectness test on a graph file");
  cperf->add_option("file", pfile)->required();
  cperf->add_option("--level", plevel, "Level to test")->required();

  // ---- character ---------------------------------------------------------------
  std::string chfile;
  CLI::App* cchar = app.add_subcommand("character", "Print the monomial character of a graph file");
  cchar->add_option("file", chfile)->required();

  // ---- verify ---------------------------------------------------------------
  std::string vtheorem, vlam, vshifts;
  int vn = 0;
  long long vs = 0, vr = 0, vdepth = -1;
  std::optional<long long> vlevel;
  CLI::App* cver = app.add_subcommand("verify", "Run a theorem verifier and print its report");
  cver->add_option("--theorem", vtheorem, "3.1|4.1|4.2|5.1|5.2|6.2|perfect")->required();
  cver->add_option("--n", vn, "Rank")->required();
  cver->add_option("--s", vs, "One-row capacity");
  cver->add_option("--r", vr, "Column height");
  cver->add_option("--lam", vlam, "Dominant weight c0,c1,...");
  cver->add_option("--depth", vdepth, "Ball radius");
  cver->add_option("--shifts", vshifts, "Shifted factors s:k,s:k,...");
  cver->add_option("--level", vlevel, "Perfectness level (defaults to s)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cgen->parsed()) return run_gen(gen);
    if (cten->parsed()) {
      CrystalGraph t = tensor(load_graph(tfile_a), load_graph(tfile_b));
      emit(t, tformat);
      return kExitPass;
    }
    if (ciso->parsed()) {
      auto iso = is_isomorphic(load_graph(ifile_a), load_graph(ifile_b));
      if (!iso) {
        std::cout << "NOT ISOMORPHIC\n";
        return kExitFail;
      }
      std::cout << nlohmann::json(*iso).dump() << "\n";
      return kExitPass;
    }
    if (cax->parsed()) {
      CrystalGraph g = load_graph(afile);
      CheckReport rep = check_axioms(g);
      if (rep.ok && aregular) rep = check_regular(g);
      for (const std::string& msg : rep.messages) std::cout << msg << "\n";
      std::cout << (rep.ok ? "OK" : "FAIL") << "\n";
      return rep.ok ? kExitPass : kExitFail;
    }
    if (cperf->parsed()) {
      PerfectReport rep = check_perfect(load_graph(pfile), plevel);
      nlohmann::json j{{"connected", rep.connected},
                       {"level_bijection", rep.level_bijection},
                       {"level_bound", rep.level_bound},
                       {"weights_in_cone", rep.weights_in_cone}};
      std::cout << j.dump(2) << "\n";
      return rep.ok() ? kExitPass : kExitFail;
    }
    if (cchar->parsed()) {
      std::cout << character_display(character(load_graph(chfile))) << "\n";
      return kExitPass;
    }
    return run_verify(vtheorem, vn, vs, vr, vlam, vdepth, vshifts, vlevel);
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const LimitExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const CrystalError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
}
