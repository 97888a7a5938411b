#include "sl2hom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "sl2hom/arith.hpp"
#include "sl2hom/error.hpp"
#include "sl2hom/finite_group.hpp"
#include "sl2hom/homology.hpp"
#include "sl2hom/serialize.hpp"
#include "sl2hom/sl2.hpp"
#include "sl2hom/tame.hpp"
#include "sl2hom/verify.hpp"

namespace sl2hom::cli {

namespace {

constexpr const char* kConjectureBanner = "CONJECTURAL (Conjecture 7.3): ";

// Appends the group fields of to_json(g) to j.
Json& with_group(Json& j, const FinGenAb& g) {
  const Json fields = to_json(g);
  for (const auto& [k, v] : fields.items()) j[k] = v;
  return j;
}

Json h2_json(Int n, const H2Result& r) {
  Json j;
  j["n"] = n;
  j["status"] = to_string(r.status);
  if (r.group) return with_group(j, *r.group);
  j["rank_lo"] = r.rank_lo;
  j["rank_hi"] = r.rank_hi;
  j["quotient"] = to_json(*r.quotient);
  return j;
}

std::string h2_text(const H2Result& r) {
  switch (r.status) {
    case H2Status::Exact: return to_text(*r.group);
    case H2Status::Conjectural: return kConjectureBanner + to_text(*r.group);
    case H2Status::Partial: break;
  }
  return "PARTIAL: rank in [" + std::to_string(r.rank_lo) + ", " + std::to_string(r.rank_hi) +
         "]; quotient " + to_text(*r.quotient);
}

std::string matrix_text(const ModMat2& x) {
  std::ostringstream s;
  s << x.e[0] << ' ' << x.e[1] << ' ' << x.e[2] << ' ' << x.e[3];
  return s.str();
}

Mat2 parse_matrix(Int n, const std::string& literal) {
  std::istringstream in(literal);
  std::vector<Rational> entries;
  for (std::string tok; in >> tok;) entries.push_back(Rational::parse(tok));
  if (entries.size() != 4) throw DomainError("matrix literal needs four entries \"a b c d\", got '" + literal + "'");
  return Mat2::of(n, entries[0], entries[1], entries[2], entries[3]);
}

struct Options {
  bool json = false;
  bool allow_conjecture = false;
  bool lower = false;
  Int n = 0, p = 0, m = 0, k = 0, max = 0;
  Int bound = OracleConfig{}.modulus_bound;
  std::vector<std::string> symbol_args;
  std::string matrix;
  std::string suite = "all";
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homology of SL_2(Z[1/n]) with a finite-group oracle", "sl2hom"};
  app.require_subcommand(1);
  Options o;
  // Set by whichever subcommand was selected; returns the exit code.
  std::function<int()> action;

  const auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit one JSON object per line"); };

  auto* h1 = app.add_subcommand("h1", "H_1(SL_2(Z[1/n])) for square-free n > 1");
  h1->add_option("n", o.n)->required();
  json_flag(h1);
  h1->callback([&] {
    action = [&] {
      const auto g = h1_sl2_zn(o.n);
      if (o.json) {
        Json j;
        j["n"] = o.n;
        out << with_group(j, g).dump() << '\n';
      } else {
        out << to_text(g) << '\n';
      }
      return 0;
    };
  });

  auto* h2 = app.add_subcommand("h2", "H_2(SL_2(Z[1/n])) for square-free n > 1");
  h2->add_option("n", o.n)->required();
  h2->add_flag("--allow-conjecture", o.allow_conjecture, "Evaluate the conjectured formula when no theorem applies");
  json_flag(h2);
  h2->callback([&] {
    action = [&] {
      const auto r = h2_sl2_zn(o.n, o.allow_conjecture);
      out << (o.json ? h2_json(o.n, r).dump() : h2_text(r)) << '\n';
      return 0;
    };
  });

  auto* gamma0 = app.add_subcommand("gamma0", "H_1(Gamma_0(n, p)) for a prime p not dividing n");
  gamma0->add_option("n", o.n)->required();
  gamma0->add_option("p", o.p)->required();
  json_flag(gamma0);
  gamma0->callback([&] {
    action = [&] {
      const auto r = h1_gamma0(o.n, o.p);
      if (o.json) {
        Json j;
        j["n"] = o.n;
        j["p"] = o.p;
        j["applicable"] = r.applicable();
        j["case"] = r.case_tag;
        if (r.group) with_group(j, *r.group);
        out << j.dump() << '\n';
      } else {
        out << (r.group ? to_text(*r.group) : "NOT APPLICABLE: the d(n) condition fails for p = " + std::to_string(o.p))
            << '\n';
      }
      return 0;
    };
  });

  auto* rank = app.add_subcommand("rank", "Bounds on the free rank of H_2(SL_2(Z[1/n]))");
  rank->add_option("n", o.n)->required();
  json_flag(rank);
  rank->callback([&] {
    action = [&] {
      const auto b = rank_bounds(o.n);
      if (o.json) {
        Json j;
        j["n"] = o.n;
        j["rank_lo"] = b.lo;
        j["rank_hi"] = b.hi;
        out << j.dump() << '\n';
      } else if (b.lo == b.hi) {
        out << b.lo << '\n';
      } else {
        out << '[' << b.lo << ", " << b.hi << "]\n";
      }
      return 0;
    };
  });

  auto* tame = app.add_subcommand("tame", "Tame symbol at p of a product of symbols {a1,b1}{a2,b2}...");
  tame->add_option("p", o.p)->required();
  tame->add_option("entries", o.symbol_args, "a1 b1 [a2 b2 ...] as rationals num/den")->required();
  json_flag(tame);
  tame->callback([&] {
    action = [&] {
      if (o.symbol_args.size() % 2 != 0) throw DomainError("tame: entries must come in pairs");
      SymbolProduct s;
      for (std::size_t i = 0; i < o.symbol_args.size(); i += 2)
        s.add(Rational::parse(o.symbol_args[i]), Rational::parse(o.symbol_args[i + 1]));
      const Int value = tame_symbol(o.p, s);
      if (o.json) {
        Json j;
        j["p"] = o.p;
        j["value"] = value;
        out << j.dump() << '\n';
      } else {
        out << value << '\n';
      }
      return 0;
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force finite group computations");
  oracle->require_subcommand(1);
  oracle->add_option("--bound", o.bound, "Largest modulus to enumerate")->capture_default_str();
  const auto cfg = [&] { return OracleConfig{o.bound}; };
  const auto print_group = [&](Json j, const std::string& label, const FiniteMatrixGroup& g) {
    const auto ab = abelianization(g, cfg());
    if (o.json) {
      j["order"] = g.order();
      j["abelianization"] = to_json(ab);
      out << j.dump() << '\n';
    } else {
      out << label << ": order " << g.order() << ", abelianization " << to_text(ab) << '\n';
    }
  };

  auto* o_sl2 = oracle->add_subcommand("sl2", "Enumerate SL_2(Z/m) and its abelianization");
  o_sl2->add_option("m", o.m)->required();
  json_flag(o_sl2);
  o_sl2->callback([&] {
    action = [&] {
      Json j;
      j["m"] = o.m;
      print_group(j, "SL_2(Z/" + std::to_string(o.m) + ")", enumerate_sl2(o.m, cfg()));
      return 0;
    };
  });

  auto* o_borel = oracle->add_subcommand("borel", "Enumerate the Borel subgroup of SL_2(F_p)");
  o_borel->add_option("p", o.p)->required();
  o_borel->add_flag("--lower", o.lower, "Lower-triangular Borel");
  json_flag(o_borel);
  o_borel->callback([&] {
    action = [&] {
      Json j;
      j["p"] = o.p;
      j["side"] = o.lower ? "lower" : "upper";
      print_group(j, std::string(o.lower ? "B'" : "B") + "(F_" + std::to_string(o.p) + ")",
                  enumerate_borel(o.p, o.lower ? BorelSide::Lower : BorelSide::Upper, cfg()));
      return 0;
    };
  });

  auto* o_kernel = oracle->add_subcommand("kernel", "Order of the kernel of SL_2(Z/p^k) -> SL_2(Z/p)");
  o_kernel->add_option("p", o.p)->required();
  o_kernel->add_option("k", o.k)->required();
  json_flag(o_kernel);
  o_kernel->callback([&] {
    action = [&] {
      if (o.k < 1 || o.k > 64) throw DomainError("kernel: k out of range");
      const int k = static_cast<int>(o.k);
      const Int order = reduction_kernel_order(o.p, k, cfg());
      const Int expected = checked_pow(o.p, static_cast<unsigned>(3 * (k - 1)));
      if (o.json) {
        Json j;
        j["p"] = o.p;
        j["k"] = o.k;
        j["order"] = order;
        j["expected"] = expected;
        out << j.dump() << '\n';
      } else {
        out << order << (order == expected ? " (matches p^(3(k-1)))" : " (expected " + std::to_string(expected) + ")")
            << '\n';
      }
      return order == expected ? 0 : 1;
    };
  });

  auto* o_coinv = oracle->add_subcommand("coinvariants", "F_p modulo (a^2 - 1)x, by enumeration");
  o_coinv->add_option("p", o.p)->required();
  json_flag(o_coinv);
  o_coinv->callback([&] {
    action = [&] {
      const auto g = fp_coinvariants(o.p);
      if (o.json) {
        Json j;
        j["p"] = o.p;
        out << with_group(j, g).dump() << '\n';
      } else {
        out << to_text(g) << '\n';
      }
      return 0;
    };
  });

  auto* o_gen = oracle->add_subcommand("generate", "Do E21(1) and E12(-1/n) generate SL_2(Z/m)?");
  o_gen->add_option("n", o.n)->required();
  o_gen->add_option("m", o.m)->required();
  json_flag(o_gen);
  o_gen->callback([&] {
    action = [&] {
      const auto g = enumerate_sl2(o.m, cfg());
      const std::vector<ModMat2> gens = {reduce_mod(e21(NLocalRational(1, 1, o.n)), o.m),
                                         reduce_mod(e12(NLocalRational(-1, o.n, o.n)), o.m)};
      const bool ok = generates(g, gens);
      if (o.json) {
        Json j;
        j["n"] = o.n;
        j["m"] = o.m;
        j["generates"] = ok;
        out << j.dump() << '\n';
      } else {
        out << (ok ? "true" : "false") << '\n';
      }
      return 0;
    };
  });

  auto* o_reduce = oracle->add_subcommand("reduce", "Reduce a matrix over Z[1/n] modulo m");
  o_reduce->add_option("n", o.n)->required();
  o_reduce->add_option("m", o.m)->required();
  o_reduce->add_option("matrix", o.matrix, "\"a b c d\" with rational entries")->required();
  json_flag(o_reduce);
  o_reduce->callback([&] {
    action = [&] {
      const auto r = reduce_mod(parse_matrix(o.n, o.matrix), o.m);
      if (o.json) {
        Json j;
        j["n"] = o.n;
        j["m"] = o.m;
        j["matrix"] = r.e;
        out << j.dump() << '\n';
      } else {
        out << matrix_text(r) << '\n';
      }
      return 0;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  std::vector<std::string> suites = suite_names();
  suites.insert(suites.begin(), "all");
  verify->add_option("--suite", o.suite, "Suite to run")->check(CLI::IsMember(suites))->capture_default_str();
  json_flag(verify);
  verify->callback([&] {
    action = [&] {
      const auto results = run_suite(o.suite);
      const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      for (const auto& r : results) {
        if (o.json) {
          Json j;
          j["suite"] = r.suite;
          j["check"] = r.check;
          j["passed"] = r.passed;
          j["detail"] = r.detail;
          out << j.dump() << '\n';
        } else {
          out << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite << '/' << r.check;
          if (!r.detail.empty()) out << " (" << r.detail << ')';
          out << '\n';
        }
      }
      if (!o.json) out << passed << '/' << results.size() << " checks passed\n";
      return passed == static_cast<std::ptrdiff_t>(results.size()) ? 0 : 1;
    };
  });

  auto* table = app.add_subcommand("table", "H_1 and H_2 for every square-free n up to --max");
  table->add_option("--max", o.max, "Largest n")->required();
  table->add_flag("--allow-conjecture", o.allow_conjecture, "Evaluate the conjectured formula when no theorem applies");
  json_flag(table);
  table->callback([&] {
    action = [&] {
      for (Int n = 2; n <= o.max; ++n) {
        if (!is_squarefree(n)) continue;
        const auto g1 = h1_sl2_zn(n);
        const auto r2 = h2_sl2_zn(n, o.allow_conjecture);
        if (o.json) {
          Json j;
          j["n"] = n;
          j["h1"] = to_json(g1);
          j["h2"] = h2_json(n, r2);
          j["h2"].erase("n");
          out << j.dump() << '\n';
        } else {
          out << n << '\t' << to_text(g1) << '\t' << h2_text(r2) << "\t[" << to_string(r2.status) << "]\n";
        }
      }
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace sl2hom::cli
