// Copyright 2026 The Butson Bent Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit status: 0 success, 1 a mathematical check
// came out false, 2 usage or I/O error.

#include "butson/bent.hpp"
#include "butson/bush.hpp"
#include "butson/codes.hpp"
#include "butson/hadamard.hpp"
#include "butson/io.hpp"
#include "butson/numtheory.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

namespace {

using namespace butson;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) values.push_back(std::stoi(item));
  if (values.empty()) throw CLI::ValidationError("expected a comma-separated list of integers");
  return values;
}

json cyc_json(const CycInt& z) { return z.to_string(); }

json certificate_json(const BentCertificate& c) {
  json j;
  j["kind"] = to_string(c.kind());
  j["bent"] = c.bent;
  j["self_dual"] = c.self_dual;
  j["conjugate_self_dual"] = c.conjugate_self_dual;
  j["dual"] = json::array();
  for (const auto& d : c.dual) j["dual"].push_back(cyc_json(d));
  j["self_dual_unit"] = c.self_dual_unit ? json(cyc_json(*c.self_dual_unit)) : json(nullptr);
  j["conjugate_unit"] = c.conjugate_unit ? json(cyc_json(*c.conjugate_unit)) : json(nullptr);
  if (c.dual_entry_orders) {
    json entries = json::array();
    for (const auto& e : *c.dual_entry_orders) {
      entries.push_back({{"root_of_unity", e.root_of_unity},
                         {"ambient_phase", e.ambient_phase},
                         {"exponent", e.root_of_unity ? json(e.exponent) : json(nullptr)}});
    }
    j["dual_entries"] = entries;
    j["ambient_guaranteed"] = c.ambient_guaranteed;
  }
  return j;
}

void print_certificate(std::ostream& out, const BentCertificate& c) {
  out << "kind: " << to_string(c.kind()) << '\n';
  out << "bent: " << (c.bent ? "yes" : "no") << "  self_dual: " << (c.self_dual ? "yes" : "no")
      << "  conjugate_self_dual: " << (c.conjugate_self_dual ? "yes" : "no") << '\n';
  if (c.self_dual_unit) out << "self-dual unit (Hx)_i conj(x_i): " << c.self_dual_unit->to_string() << '\n';
  if (c.conjugate_unit) out << "conjugate unit (Hx)_i x_i: " << c.conjugate_unit->to_string() << '\n';
  for (std::size_t i = 0; i < c.dual.size(); ++i) {
    out << "(Hx)_" << i << " = " << c.dual[i].to_string();
    if (c.dual_entry_orders) {
      const auto& e = (*c.dual_entry_orders)[i];
      if (e.root_of_unity) {
        out << "   y = +-zeta_" << e.ambient_phase << "^" << e.exponent;
      } else {
        out << "   y not in <zeta_" << e.ambient_phase << ">";
      }
    }
    out << '\n';
  }
  if (c.dual_entry_orders) {
    out << "ambient phase guaranteed by self-conjugacy: " << (c.ambient_guaranteed ? "yes" : "no") << '\n';
  }
}

SearchMode parse_mode(const std::string& s) {
  if (s == "any") return SearchMode::any;
  if (s == "self-dual" || s == "self_dual") return SearchMode::self_dual;
  if (s == "conjugate-self-dual" || s == "conjugate_self_dual") return SearchMode::conjugate_self_dual;
  throw CLI::ValidationError("--mode must be any, self-dual or conjugate-self-dual");
}

json report_json(const numtheory::ObstructionReport& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["violated"] = r.any_violated();
  j["verdicts"] = json::array();
  for (const auto& v : r.verdicts) {
    j["verdicts"].push_back({{"rule", v.rule},
                             {"prime", v.prime},
                             {"applicable", v.applicable},
                             {"violated", v.violated},
                             {"witness", v.witness}});
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Butson Hadamard matrices, bent vectors and Z_k codes in exact arithmetic"};
  app.require_subcommand(1);

  std::string out_path;
  bool as_json = false;
  unsigned workers = 0;

  // construct
  auto* construct = app.add_subcommand("construct", "build a matrix, vector or code");
  construct->require_subcommand(1);
  int fourier_n = 0;
  std::string group;
  auto* c_fourier = construct->add_subcommand("fourier", "character table F(C_n) or F(G)");
  c_fourier->add_option("--n", fourier_n, "cyclic order");
  c_fourier->add_option("--group", group, "comma-separated cyclic factors, e.g. 3,3");
  int syl_m = 1;
  auto* c_sylvester = construct->add_subcommand("sylvester", "F(C_2^m)");
  c_sylvester->add_option("--m", syl_m)->required();
  std::string kron_a, kron_b;
  auto* c_kron = construct->add_subcommand("kron", "Kronecker product of two matrix files");
  c_kron->add_option("a", kron_a)->required();
  c_kron->add_option("b", kron_b)->required();
  int bush_p = 3, bush_a = 1;
  auto* c_bush = construct->add_subcommand("bush", "block-circulant Bush-type B_a in BH(p^2, p)");
  c_bush->add_option("--p", bush_p)->required();
  c_bush->add_option("--a", bush_a)->required();
  int ksw_k = 2, ksw_m = 2;
  auto* c_ksw = construct->add_subcommand("ksw", "bilinear-form bent vector over Z_k^m");
  c_ksw->add_option("--k", ksw_k)->required();
  c_ksw->add_option("--m", ksw_m)->required();
  int rm_q = 2, rm_m = 2;
  auto* c_rm = construct->add_subcommand("rm", "first-order generalised Reed-Muller code");
  c_rm->add_option("--q", rm_q)->required();
  c_rm->add_option("--m", rm_m)->required();
  for (auto* sub : {c_fourier, c_sylvester, c_kron, c_bush, c_ksw, c_rm}) {
    sub->add_option("--out,-o", out_path, "output file (default stdout)");
    sub->add_flag("--json", as_json, "JSON output (matrices only)");
  }

  // verify
  auto* verify = app.add_subcommand("verify", "exact checks");
  verify->require_subcommand(1);
  std::string v_matrix, v_other;
  int v_block = 0;
  auto* v_had = verify->add_subcommand("hadamard", "rows pairwise orthogonal");
  v_had->add_option("matrix", v_matrix)->required();
  auto* v_bush = verify->add_subcommand("bush", "Bush-type block sums and Hadamard");
  v_bush->add_option("matrix", v_matrix)->required();
  v_bush->add_option("--block-size", v_block, "default sqrt(n)");
  auto* v_unb = verify->add_subcommand("unbiased", "H K^* = z L");
  v_unb->add_option("first", v_matrix)->required();
  v_unb->add_option("second", v_other)->required();
  for (auto* sub : {v_had, v_bush, v_unb}) sub->add_flag("--json", as_json);

  // bent-check
  std::string bc_matrix, bc_vector;
  auto* bent_check = app.add_subcommand("bent-check", "classify a vector against a matrix");
  bent_check->add_option("matrix", bc_matrix)->required();
  bent_check->add_option("vector", bc_vector)->required();
  bent_check->add_flag("--json", as_json);

  // bent-search
  std::string bs_matrix, bs_mode = "any";
  std::uint64_t bs_budget = 0;
  auto* bent_search = app.add_subcommand("bent-search", "exhaustive bent vector search");
  bent_search->add_option("matrix", bs_matrix)->required();
  bent_search->add_option("--mode", bs_mode, "any | self-dual | conjugate-self-dual");
  auto* budget_opt = bent_search->add_option("--budget", bs_budget, "examine only this many candidates");
  bent_search->add_option("--workers", workers, "0 = all cores");
  bent_search->add_flag("--json", as_json);

  // covering-radius
  std::string cr_matrix, cr_rm, cr_code, cr_bent;
  std::uint64_t cr_samples = 0, cr_seed = 1, cr_budget = std::uint64_t{1} << 30;
  bool cr_exact = false;
  auto* covering = app.add_subcommand("covering-radius", "covering radius of C_H or R_q(1,m)");
  auto* src_m = covering->add_option("--code-from", cr_matrix, "matrix file; uses C_H");
  auto* src_rm = covering->add_option("--rm", cr_rm, "q,m");
  auto* src_code = covering->add_option("--code", cr_code, "code file");
  src_m->excludes(src_rm)->excludes(src_code);
  src_rm->excludes(src_code);
  auto* exact_flag = covering->add_flag("--exact", cr_exact, "exhaustive scan (default)");
  auto* sample_opt = covering->add_option("--sample", cr_samples, "random ambient vectors; gives a lower bound");
  exact_flag->excludes(sample_opt);
  covering->add_option("--seed", cr_seed);
  covering->add_option("--budget", cr_budget, "max ambient vectors for --exact");
  covering->add_option("--bent-vector", cr_bent, "phase-3 bent vector for the distance lower bound");
  covering->add_option("--workers", workers, "0 = all cores");
  covering->add_flag("--json", as_json);

  // obstructions
  std::int64_t ob_n = 0, ob_k = 0;
  auto* obstructions = app.add_subcommand("obstructions", "number-theoretic non-existence tests");
  obstructions->add_option("--n", ob_n)->required();
  obstructions->add_option("--k", ob_k)->required();
  obstructions->add_flag("--json", as_json);

  // order
  std::string or_matrix;
  int or_max = 0;
  auto* order = app.add_subcommand("order", "multiplicative order of H / sqrt(n)");
  order->add_option("matrix", or_matrix)->required();
  order->add_option("--max-t", or_max, "default lcm(4, n, k)");
  order->add_flag("--json", as_json);

  // bush
  int bu_p = 3, bu_a = 1;
  bool bu_algebra = false;
  auto* bush = app.add_subcommand("bush", "write B_a and optionally check the projector algebra");
  bush->add_option("--p", bu_p)->required();
  bush->add_option("--a", bu_a);
  bush->add_option("--out,-o", out_path);
  bush->add_flag("--verify-algebra", bu_algebra);
  bush->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) {
      Output out(out_path);
      auto emit_matrix = [&](const LogMatrix& m) {
        if (as_json) {
          io::write_matrix_json(out.stream(), m);
        } else {
          io::write_matrix(out.stream(), m);
        }
      };
      if (*c_fourier) {
        if (!group.empty()) {
          emit_matrix(character_table(AbelianGroupSpec(parse_int_list(group))));
        } else if (fourier_n >= 1) {
          emit_matrix(fourier(fourier_n));
        } else {
          std::cerr << "construct fourier: give --n or --group\n";
          return kUsage;
        }
      } else if (*c_sylvester) {
        emit_matrix(sylvester(syl_m));
      } else if (*c_kron) {
        emit_matrix(kronecker(io::read_matrix_file(kron_a), io::read_matrix_file(kron_b)));
      } else if (*c_bush) {
        emit_matrix(bush_circulant(bush_p, bush_a).base());
      } else if (*c_ksw) {
        io::write_vector(out.stream(), ksw_vector(ksw_k, ksw_m));
      } else if (*c_rm) {
        io::write_code(out.stream(), reed_muller_1(rm_q, rm_m));
      }
      return kOk;
    }

    if (*verify) {
      const LogMatrix m = io::read_matrix_file(v_matrix);
      bool ok = false;
      json j;
      if (*v_had) {
        ok = verify_hadamard(m, 0);
        j = {{"check", "hadamard"}, {"n", m.order()}, {"k", m.phase()}, {"result", ok}};
        if (!as_json) std::cout << "BH(" << m.order() << "," << m.phase() << ") hadamard: " << (ok ? "true" : "false") << '\n';
      } else if (*v_bush) {
        const int b = v_block > 0 ? v_block : static_cast<int>(numtheory::isqrt(m.order()));
        const bool sums = has_bush_block_sums(m, b);
        const bool had = verify_hadamard(m, 0);
        ok = sums && had;
        j = {{"check", "bush"}, {"block_size", b}, {"block_sums", sums}, {"hadamard", had}, {"result", ok}};
        if (!as_json) {
          std::cout << "block sums (block size " << b << "): " << (sums ? "true" : "false") << '\n'
                    << "hadamard: " << (had ? "true" : "false") << '\n';
        }
      } else {
        const LogMatrix other = io::read_matrix_file(v_other);
        const auto z = is_unbiased(m, other);
        ok = z.has_value();
        j = {{"check", "unbiased"}, {"result", ok}, {"z", z ? json(z->to_string()) : json(nullptr)}};
        if (!as_json) {
          std::cout << "unbiased: " << (ok ? "true" : "false");
          if (z) std::cout << "  z = " << z->to_string();
          std::cout << '\n';
        }
      }
      if (as_json) std::cout << j.dump() << '\n';
      return ok ? kOk : kFalse;
    }

    if (*bent_check) {
      const LogMatrix m = io::read_matrix_file(bc_matrix);
      const LogVector x = io::read_vector_file(bc_vector);
      const BentCertificate cert = check_bent(m, x);
      if (as_json) {
        std::cout << certificate_json(cert).dump() << '\n';
      } else {
        print_certificate(std::cout, cert);
      }
      return cert.bent ? kOk : kFalse;
    }

    if (*bent_search) {
      const LogMatrix m = io::read_matrix_file(bs_matrix);
      SearchOptions opts;
      opts.mode = parse_mode(bs_mode);
      opts.workers = workers;
      if (*budget_opt) opts.budget = bs_budget;
      json matches = json::array();
      const SearchSummary summary = search_bent(m, opts, [&](std::uint64_t index, const LogVector& x) {
        if (as_json) {
          matches.push_back({{"index", index}, {"entries", std::vector<int>(x.entries().data(), x.entries().data() + x.length())}});
        } else {
          std::cout << index << ' ' << io::entries_line(x) << '\n';
        }
      });
      if (as_json) {
        std::cout << json{{"mode", bs_mode},
                          {"candidates", summary.candidates},
                          {"matches", matches},
                          {"count", summary.matches},
                          {"exhausted", summary.exhausted}}
                         .dump()
                  << '\n';
      } else {
        std::cerr << summary.matches << " match(es) among " << summary.candidates << " candidates"
                  << (summary.exhausted ? "" : " (budget reached)") << '\n';
      }
      return kOk;
    }

    if (*covering) {
      std::optional<ZkCode> code;
      std::optional<LogMatrix> matrix;
      if (!cr_matrix.empty()) {
        matrix = io::read_matrix_file(cr_matrix);
        code = code_from_matrix(*matrix).translates;
      } else if (!cr_rm.empty()) {
        const auto qm = parse_int_list(cr_rm);
        if (qm.size() != 2) throw CLI::ValidationError("--rm expects q,m");
        code = reed_muller_1(qm[0], qm[1]);
      } else if (!cr_code.empty()) {
        std::ifstream f(cr_code);
        if (!f) throw std::runtime_error("cannot open " + cr_code);
        code = io::read_code(f);
      } else {
        std::cerr << "covering-radius: give --code-from, --rm or --code\n";
        return kUsage;
      }
      CoveringOptions opts;
      opts.budget = cr_budget;
      opts.workers = workers;
      opts.seed = cr_seed;
      if (*sample_opt) opts.samples = cr_samples;
      const CoveringResult res = covering_radius(*code, opts);

      json upper = nullptr, lower = nullptr;
      const int q = code->modulus();
      if (matrix && q >= 3 && numtheory::is_prime(q)) {
        const SurdBound b = leducq_upper_bound(code->length(), q);
        upper = {{"value", b.to_string()}, {"floor", b.floor}};
      }
      std::optional<LowerBoundReport> lb;
      if (!cr_bent.empty()) {
        if (!matrix) throw CLI::ValidationError("--bent-vector needs --code-from");
        lb = bent_lower_bound(*matrix, io::read_vector_file(cr_bent));
        lower = {{"value", lb->bound}, {"witness_min_distance", lb->min_distance}};
      }
      const bool self_comp = is_self_complementary(*code);
      const bool strength2 = has_strength_2(*code);
      if (as_json) {
        std::cout << json{{"radius_or_bound", res.radius},
                          {"exact", res.exact},
                          {"examined", res.examined},
                          {"upper_bound", upper},
                          {"lower_bound", lower},
                          {"code", {{"length", code->length()}, {"modulus", q}, {"size", code->size()}}},
                          {"premises", {{"self_complementary", self_comp}, {"strength_2", strength2}}}}
                         .dump()
                  << '\n';
      } else {
        std::cout << "code: length " << code->length() << ", modulus " << q << ", " << code->size() << " words\n";
        std::cout << (res.exact ? "covering radius: " : "covering radius lower bound: ") << res.radius << '\n';
        if (!upper.is_null()) std::cout << "upper bound: " << upper["value"].get<std::string>() << " (floor " << upper["floor"] << ")\n";
        if (lb) std::cout << "bent lower bound: " << lb->bound << " (witness distance " << lb->min_distance << ")\n";
        std::cout << "self-complementary: " << (self_comp ? "yes" : "no") << "  strength 2: " << (strength2 ? "yes" : "no") << '\n';
      }
      return kOk;
    }

    if (*obstructions) {
      const auto report = numtheory::bent_obstructions(ob_n, ob_k);
      const auto ambient = numtheory::dual_entry_ambient_phase(ob_n, ob_k);
      json j = report_json(report);
      j["self_conjugate"] = numtheory::is_self_conjugate(ob_n, ob_k);
      j["dual_entry_ambient_phase"] = ambient ? json(*ambient) : json(nullptr);
      if (ob_k == ob_n && ob_n >= 4) j["real_circulant_excluded"] = numtheory::circulant_real_obstruction(ob_n);
      if (ob_k == 3 || ob_k == 4) j["entry_root_condition"] = numtheory::entry_root_obstruction(ob_n, static_cast<int>(ob_k));
      if (as_json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "n = " << ob_n << ", k = " << ob_k << '\n';
        std::cout << "rule                   prime  applicable  violated  witness\n";
        for (const auto& v : report.verdicts) {
          std::cout << std::left << std::setw(23) << v.rule << std::setw(7) << v.prime << std::setw(12)
                    << (v.applicable ? "yes" : "no") << std::setw(10) << (v.violated ? "YES" : "no") << v.witness << '\n';
        }
        std::cout << "n self-conjugate mod k: " << (j["self_conjugate"].get<bool>() ? "yes" : "no") << '\n';
        if (ambient) std::cout << "dual entries lie in <zeta_" << *ambient << ">\n";
        if (j.contains("real_circulant_excluded")) {
          std::cout << "real circulant Hadamard of order n excluded: "
                    << (j["real_circulant_excluded"].get<bool>() ? "yes" : "no") << '\n';
        }
        if (j.contains("entry_root_condition")) {
          std::cout << "entry-root condition (n = " << (ob_k == 3 ? 9 : 4) << "m^2): "
                    << (j["entry_root_condition"].get<bool>() ? "holds" : "fails") << '\n';
        }
        std::cout << (report.any_violated() ? "VIOLATED: no H-bent vector exists for any H in BH(n,k)\n"
                                            : "no obstruction\n");
      }
      return kOk;
    }

    if (*order) {
      const LogMatrix m = io::read_matrix_file(or_matrix);
      if (!verify_hadamard(m, 0)) {
        std::cerr << "order: matrix is not Hadamard\n";
        return kFalse;
      }
      const int bound = std::lcm(std::lcm(4, m.order()), m.phase());
      const int max_t = or_max > 0 ? or_max : bound;
      const auto t = unitary_order(m, max_t);
      if (as_json) {
        std::cout << json{{"order", t ? json(*t) : json(nullptr)},
                          {"max_t", max_t},
                          {"lcm_4_n_k", bound},
                          {"divides_lcm", t ? json(bound % *t == 0) : json(nullptr)}}
                         .dump()
                  << '\n';
      } else if (t) {
        std::cout << "order: " << *t << " (lcm(4,n,k) = " << bound << (bound % *t == 0 ? ", divides" : ", does not divide")
                  << ")\n";
      } else {
        std::cout << "no order <= " << max_t << '\n';
      }
      return t ? kOk : kFalse;
    }

    if (*bush) {
      bool ok = true;
      json j;
      if (bu_algebra) {
        ok = verify_projector_algebra(bu_p);
        j["projector_algebra"] = ok;
        if (!as_json) std::cout << "projector algebra p=" << bu_p << ": " << (ok ? "true" : "false") << '\n';
      }
      if (!out_path.empty() || !bu_algebra) {
        const BushMatrix b = bush_circulant(bu_p, bu_a);
        if (out_path.empty()) {
          io::write_matrix(std::cout, b.base());
        } else {
          io::write_matrix_file(out_path, b.base());
          j["written"] = out_path;
        }
        j["conjugate_self_bent"] = conjugate_self_bent_check(b.base());
      }
      if (as_json) std::cout << j.dump() << '\n';
      return ok ? kOk : kFalse;
    }
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
