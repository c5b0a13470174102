// Command-line front end: classification, reduction, growth queries,
// brute-force oracles, fixture generation, and scaling benchmarks over the
// trigraph text format.
//
// Exit codes: 0 success, 1 structural rejection (disconnected or degenerate
// input, or a reduction that left the algorithm's domain), 2 usage or parse
// errors.  All reports go to stdout and are byte-deterministic; timings and
// diagnostics go to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trigraph/antithicken.hpp"
#include "trigraph/classify.hpp"
#include "trigraph/gen.hpp"
#include "trigraph/io.hpp"
#include "trigraph/oracle.hpp"
#include "trigraph/schposc.hpp"

namespace {

using namespace trigraph;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << data;
}

Trigraph load_trigraph(const std::string& path) {
  return parse_trigraph(read_file(path));
}

void emit(const std::string& out_path, const std::string& data) {
  if (out_path.empty())
    std::cout << data;
  else
    write_file(out_path, data);
}

std::string pair_line(const CliquePair& p) { return p.to_string() + "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"trigraph structure toolkit"};
  app.require_subcommand(1);

  // classify
  std::string classify_file;
  auto* cmd_classify = app.add_subcommand("classify", "report structure flags");
  cmd_classify->add_option("file", classify_file)->required();

  // antithicken
  std::string at_file, at_out, at_map;
  bool at_force = false, at_norecheck = false;
  auto* cmd_at = app.add_subcommand(
      "antithicken", "contract all square-connected homogeneous pairs");
  cmd_at->add_option("file", at_file)->required();
  cmd_at->add_option("-o,--output", at_out, "reduced trigraph file");
  cmd_at->add_option("--map", at_map, "thickening map file");
  cmd_at->add_flag("--force", at_force, "run on degenerate input");
  cmd_at->add_flag("--no-recheck", at_norecheck,
                   "skip the laminarity recheck of the output");

  // schposc
  std::string sp_file;
  int sp_u = 0, sp_v = 0;
  auto* cmd_sp = app.add_subcommand(
      "schposc", "smallest homogeneous pair with the seed in A");
  cmd_sp->add_option("file", sp_file)->required();
  cmd_sp->add_option("u", sp_u)->required();
  cmd_sp->add_option("v", sp_v)->required();

  // laminar
  std::string lam_file;
  auto* cmd_lam = app.add_subcommand(
      "laminar", "check for square-connected homogeneous pairs");
  cmd_lam->add_option("file", lam_file)->required();

  // verify
  std::string ver_g, ver_gp, ver_map;
  auto* cmd_ver =
      app.add_subcommand("verify", "check a thickening map between two files");
  cmd_ver->add_option("original", ver_g)->required();
  cmd_ver->add_option("reduced", ver_gp)->required();
  cmd_ver->add_option("map", ver_map)->required();

  // oracle
  auto* cmd_oracle =
      app.add_subcommand("oracle", "brute-force reference computations");
  cmd_oracle->require_subcommand(1);
  std::string oh_file, oh_kind = "all";
  int oh_cap = 14;
  auto* cmd_oh = cmd_oracle->add_subcommand("hposcs",
                                            "enumerate homogeneous pairs");
  cmd_oh->add_option("file", oh_file)->required();
  cmd_oh->add_option("--kind", oh_kind)
      ->check(CLI::IsMember({"all", "deletion-minimal", "square-connected"}));
  cmd_oh->add_option("--cap", oh_cap);

  std::string os_file;
  int os_u = 0, os_v = 0, os_cap = 14;
  auto* cmd_os = cmd_oracle->add_subcommand(
      "schposcs", "minimal pair containing a seed, by enumeration");
  cmd_os->add_option("file", os_file)->required();
  cmd_os->add_option("u", os_u)->required();
  cmd_os->add_option("v", os_v)->required();
  cmd_os->add_option("--cap", os_cap);

  std::string ol_file;
  int ol_cap = 14;
  auto* cmd_ol =
      cmd_oracle->add_subcommand("laminar", "laminarity by enumeration");
  cmd_ol->add_option("file", ol_file)->required();
  cmd_ol->add_option("--cap", ol_cap);

  std::string oa_file;
  int oa_cap = 8;
  auto* cmd_oa = cmd_oracle->add_subcommand("antithickenings",
                                            "enumerate all antithickenings");
  cmd_oa->add_option("file", oa_file)->required();
  cmd_oa->add_option("--cap", oa_cap);

  std::string oi_file1, oi_file2;
  int oi_cap = 10;
  auto* cmd_oi = cmd_oracle->add_subcommand("iso", "isomorphism test");
  cmd_oi->add_option("file1", oi_file1)->required();
  cmd_oi->add_option("file2", oi_file2)->required();
  cmd_oi->add_option("--cap", oi_cap);

  // gen
  auto* cmd_gen = app.add_subcommand("gen", "emit fixture files");
  cmd_gen->require_subcommand(1);
  int gen_k = 0;
  std::string gen_out;
  auto* cmd_gcm = cmd_gen->add_subcommand(
      "cliques-matching", "two k-cliques joined by a perfect matching");
  cmd_gcm->add_option("k", gen_k)->required();
  cmd_gcm->add_option("-o,--output", gen_out);
  std::string gen_name, gen_name_out;
  auto* cmd_gnamed = cmd_gen->add_subcommand("named", "named fixture");
  cmd_gnamed->add_option("name", gen_name)->required();
  cmd_gnamed->add_option("-o,--output", gen_name_out);
  int gen_rn = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_rand_out;
  auto* cmd_grand = cmd_gen->add_subcommand(
      "random", "random connected non-degenerate laminar trigraph");
  cmd_grand->add_option("n", gen_rn)->required();
  cmd_grand->add_option("seed", gen_seed)->required();
  cmd_grand->add_option("-o,--output", gen_rand_out);

  // bench
  int bench_kmin = 0, bench_kmax = 0;
  auto* cmd_bench = app.add_subcommand("bench", "scaling table");
  auto* cmd_bench_cm = cmd_bench->add_subcommand(
      "cliques-matching", "doubling k over the cliques-plus-matching family");
  cmd_bench->require_subcommand(1);
  cmd_bench_cm->add_option("kmin", bench_kmin)->required();
  cmd_bench_cm->add_option("kmax", bench_kmax)->required();

  CLI11_PARSE(app, argc, argv);

  if (*cmd_classify) {
    const Trigraph g = load_trigraph(classify_file);
    std::cout << classification_report(g, classify(g));
    return 0;
  }

  if (*cmd_at) {
    const Trigraph g = load_trigraph(at_file);
    AntithickenOptions opts;
    opts.force = at_force;
    opts.recheck = !at_norecheck;
    const AntithickeningResult res = optimal_antithickening(g, opts);
    emit(at_out, serialize_trigraph(res.reduced));
    if (!at_map.empty()) write_file(at_map, serialize_thickening_map(res.map));
    std::cerr << "reduced " << g.vertex_count() << " -> "
              << res.reduced.vertex_count() << " vertices, "
              << res.contracted_pairs.size() << " contracted pair(s)\n";
    return 0;
  }

  if (*cmd_sp) {
    const Trigraph g = load_trigraph(sp_file);
    const auto r = schposc(g, sp_u, sp_v);
    std::cout << (r ? pair_line(*r) : "none\n");
    return 0;
  }

  if (*cmd_lam) {
    const Trigraph g = load_trigraph(lam_file);
    const auto w = find_square_connected_pair(g);
    std::cout << "laminar: " << (w ? "false" : "true") << "\n";
    if (w) std::cout << "witness: " << pair_line(*w);
    return 0;
  }

  if (*cmd_ver) {
    const Trigraph g = load_trigraph(ver_g);
    const Trigraph gp = load_trigraph(ver_gp);
    const ThickeningMap map = parse_thickening_map(read_file(ver_map));
    std::cout << "valid: "
              << (verify_thickening(gp, map, g) ? "true" : "false") << "\n";
    return 0;
  }

  if (*cmd_oh) {
    const Trigraph g = load_trigraph(oh_file);
    const oracle::HposcKind kind =
        oh_kind == "all"              ? oracle::HposcKind::All
        : oh_kind == "deletion-minimal" ? oracle::HposcKind::DeletionMinimal
                                        : oracle::HposcKind::SquareConnected;
    const auto pairs = oracle::enumerate_hposcs(g, kind, oh_cap);
    std::cout << "count: " << pairs.size() << "\n";
    for (const auto& p : pairs) std::cout << pair_line(p);
    return 0;
  }

  if (*cmd_os) {
    const Trigraph g = load_trigraph(os_file);
    const auto r = oracle::minimal_hposc_containing(g, os_u, os_v, os_cap);
    std::cout << (r ? pair_line(*r) : "none\n");
    return 0;
  }

  if (*cmd_ol) {
    const Trigraph g = load_trigraph(ol_file);
    std::cout << "laminar: "
              << (oracle::laminar_by_enumeration(g, ol_cap) ? "true" : "false")
              << "\n";
    return 0;
  }

  if (*cmd_oa) {
    const Trigraph g = load_trigraph(oa_file);
    const auto all = oracle::enumerate_antithickenings(g, oa_cap);
    std::cout << "count: " << all.size() << "\n";
    for (const auto& [gp, map] : all) {
      std::cout << "parts:";
      for (Vertex v = 0; v < map.source_size(); ++v) {
        if (v) std::cout << " |";
        for (Vertex x : map.part(v)) std::cout << " " << x;
      }
      std::cout << "\n";
    }
    return 0;
  }

  if (*cmd_oi) {
    const Trigraph g1 = load_trigraph(oi_file1);
    const Trigraph g2 = load_trigraph(oi_file2);
    std::cout << "isomorphic: "
              << (oracle::are_isomorphic(g1, g2, oi_cap) ? "true" : "false")
              << "\n";
    return 0;
  }

  if (*cmd_gcm) {
    emit(gen_out, serialize_trigraph(gen::gen_cliques_matching(gen_k)));
    return 0;
  }
  if (*cmd_gnamed) {
    emit(gen_name_out, serialize_trigraph(gen::gen_named(gen_name)));
    return 0;
  }
  if (*cmd_grand) {
    emit(gen_rand_out,
         serialize_trigraph(gen::gen_random_laminar_base(gen_rn, gen_seed)));
    return 0;
  }

  if (*cmd_bench_cm) {
    if (bench_kmin < 2 || bench_kmax < bench_kmin)
      throw std::invalid_argument("bench requires 2 <= kmin <= kmax");
    std::cout << "k n m schposc_steps\n";
    for (int k = bench_kmin; k <= bench_kmax; k *= 2) {
      const Trigraph g = gen::gen_cliques_matching(k);
      const SchposcResult single = schposc_run(g, 0, 1);
      const auto t0 = std::chrono::steady_clock::now();
      AntithickenOptions opts;
      opts.force = true;
      opts.recheck = false;
      const auto res = optimal_antithickening(g, opts);
      const auto t1 = std::chrono::steady_clock::now();
      const double ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::cout << k << " " << g.vertex_count() << " "
                << g.adjacent_pair_count() << " " << single.steps << "\n";
      std::cerr << "k=" << k << " reduced_n=" << res.reduced.vertex_count()
                << " pipeline_ms=" << ms << "\n";
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const trigraph::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const trigraph::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const trigraph::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
