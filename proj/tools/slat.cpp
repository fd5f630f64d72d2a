// Command-line front end: every subcommand reads a structure file, runs one
// library operation and prints a deterministic report.  Exit codes: 0 the
// checked property holds (or the command just succeeds), 1 it fails (the
// witness goes to stdout), 2 the input was unusable.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slat/bounded.hpp"
#include "slat/congruence.hpp"
#include "slat/directsum.hpp"
#include "slat/enumerate.hpp"
#include "slat/factorize.hpp"
#include "slat/io.hpp"
#include "slat/semilattice.hpp"

namespace {

slat::Semilattice load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw slat::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return slat::parse_slat(buf.str());
}

// one element given by name or index
int resolve_element(const slat::Semilattice& a, const std::string& token) {
  if (a.has_names())
    for (int x = 0; x < a.size(); ++x)
      if (a.names()[x] == token) return x;
  try {
    size_t used = 0;
    int v = std::stoi(token, &used);
    if (used == token.size() && v >= 0 && v < a.size()) return v;
  } catch (const std::exception&) {
  }
  throw slat::Error("'" + token + "' names no element");
}

std::vector<int> resolve_list(const slat::Semilattice& a, const std::string& csv) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(resolve_element(a, token));
  if (out.empty()) throw slat::Error("empty element list '" + csv + "'");
  return out;
}

std::string show_block(const slat::Semilattice& a, const std::vector<int>& block) {
  std::string out = "{";
  for (size_t i = 0; i < block.size(); ++i) {
    if (i) out += ",";
    out += a.element_name(block[i]);
  }
  return out + "}";
}

std::string show_congruence(const slat::Semilattice& a, const slat::Congruence& c) {
  std::string out;
  for (const auto& block : c.blocks()) out += show_block(a, block);
  return out;
}

std::string show_tuple(const slat::Semilattice& a, const std::vector<int>& xs,
                       const std::vector<std::string>& labels) {
  std::string out = "(";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += labels[i] + "=" + a.element_name(xs[i]);
  }
  return out + ")";
}

std::string show_axiom(const slat::Semilattice& a, const std::string& name,
                       const slat::AxiomVerdict& v) {
  if (v.holds) return name + ": holds";
  std::vector<std::string> labels;
  std::vector<int> xs = v.witness;
  if (name == "Mod1") labels = {"x", "y", "x1", "x2"};
  else if (name == "Mod2") {
    labels = {"x", "y", "x1", "x2"};
    int side = xs.back();
    xs.pop_back();
    return name + ": fails at " + show_tuple(a, xs, labels) + " on the I" +
           std::to_string(side) + " equation";
  } else if (name == "Abs") {
    labels = {"x", "y", "z"};
    int side = xs.back();
    xs.pop_back();
    return name + ": fails at " + show_tuple(a, xs, labels) +
           (side == 1 ? " with x,y in I1, z in I2" : " with x,y in I2, z in I1");
  } else if (name == "exi" || name == "ori") labels = {"x1", "x2"};
  else labels = {"x"};
  return name + ": fails at " + show_tuple(a, xs, labels);
}

int cmd_validate(const std::string& path) {
  slat::Semilattice a = load(path);
  std::cout << "valid join-semilattice: " << a.size() << " elements, top "
            << a.element_name(a.top());
  if (auto b = a.bottom())
    std::cout << ", bottom " << a.element_name(*b);
  else
    std::cout << ", no least element";
  std::cout << "\n";
  return 0;
}

int cmd_meets(const std::string& path) {
  slat::Semilattice a = load(path);
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      if (y) std::cout << " ";
      auto m = a.meet(x, y);
      std::cout << (m ? a.element_name(*m) : "-");
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_congruences(const std::string& path) {
  slat::Semilattice a = load(path);
  std::vector<slat::Congruence> congs = slat::all_congruences(a);
  std::cout << "congruences: " << congs.size() << "\n";
  for (const slat::Congruence& c : congs)
    std::cout << show_congruence(a, c) << "\n";
  return 0;
}

int cmd_factor_pairs(const std::string& path) {
  slat::Semilattice a = load(path);
  std::vector<slat::CongruencePair> pairs = slat::complementary_factor_pairs(a);
  std::cout << "complementary pairs: " << pairs.size() << "\n";
  for (const slat::CongruencePair& p : pairs)
    std::cout << "theta " << show_congruence(a, p.theta) << "  delta "
              << show_congruence(a, p.delta) << "\n";
  return 0;
}

int report_axioms(const slat::Semilattice& a, const slat::AxiomReport& r) {
  std::cout << show_axiom(a, "Mod1", r.mod1) << "\n"
            << show_axiom(a, "Mod2", r.mod2) << "\n"
            << show_axiom(a, "Abs", r.abs) << "\n"
            << show_axiom(a, "exi", r.exi) << "\n"
            << show_axiom(a, "onto", r.onto) << "\n"
            << show_axiom(a, "ori", r.ori) << "\n";
  std::cout << "direct sum: " << (r.direct_sum() ? "yes" : "no") << "\n";
  return r.direct_sum() ? 0 : 1;
}

int cmd_check_sum(const std::string& path, const std::string& c,
                  const std::string& i1, const std::string& i2) {
  slat::Semilattice a = load(path);
  slat::SummandPair sp{resolve_element(a, c), resolve_list(a, i1),
                       resolve_list(a, i2)};
  return report_axioms(a, slat::check_axioms(a, sp));
}

int report_bounded(const slat::Semilattice& a, const slat::BoundedReport& r,
                   bool zero) {
  if (!r.applicable) {
    std::cout << "not applicable: the structure has no least element\n";
    return 1;
  }
  std::cout << "applicable: c = " << a.element_name(r.c)
            << (zero ? " (least element)" : " (greatest element)") << "\n";
  if (zero) {
    std::cout << show_axiom(a, "Abs", r.abs) << "\n";
    std::cout << (r.onto.holds
                      ? std::string("onto: holds")
                      : "onto: fails, " + a.element_name(r.onto.witness[0]) +
                            " is no join of a summand pair")
              << "\n";
  } else {
    std::cout << show_axiom(a, "exi", r.exi) << "\n";
    std::cout << (r.onto.holds
                      ? std::string("onto: holds")
                      : "onto: fails, " + a.element_name(r.onto.witness[0]) +
                            " is no meet of a summand pair")
              << "\n";
    if (r.mod1.holds)
      std::cout << "Mod1: holds\n";
    else
      std::cout << "Mod1: fails at "
                << show_tuple(a, r.mod1.witness, {"x1", "x2", "y"}) << "\n";
  }
  std::cout << "summands are " << (zero ? "ideals" : "dual ideals") << ": "
            << (r.ideals ? "yes" : "no") << "\n";
  std::cout << "direct sum: " << (r.verdict ? "yes" : "no") << "\n";
  return r.verdict ? 0 : 1;
}

int cmd_check_zero(const std::string& path, const std::string& i1,
                   const std::string& i2) {
  slat::Semilattice a = load(path);
  return report_bounded(
      a, slat::check_zero_case(a, resolve_list(a, i1), resolve_list(a, i2)),
      true);
}

int cmd_check_one(const std::string& path, const std::string& i1,
                  const std::string& i2) {
  slat::Semilattice a = load(path);
  return report_bounded(
      a, slat::check_one_case(a, resolve_list(a, i1), resolve_list(a, i2)),
      false);
}

int cmd_factorize(const std::string& path, const std::string& c,
                  const std::string& strategy) {
  slat::Semilattice a = load(path);
  slat::PairStrategy strat = slat::PairStrategy::MinDelta;
  if (strategy == "first") strat = slat::PairStrategy::First;
  else if (strategy == "last") strat = slat::PairStrategy::Last;
  else if (strategy != "min-delta")
    throw slat::Error("unknown strategy '" + strategy + "'");
  slat::Factorization f = slat::factorize(a, resolve_element(a, c), strat);
  std::cout << "factors: " << f.factors.size() << "\n";
  for (size_t i = 0; i < f.factors.size(); ++i) {
    std::cout << "factor " << i << " (" << f.factors[i].size() << " elements)\n";
    for (int x = 0; x < f.factors[i].size(); ++x) {
      for (int y = 0; y < f.factors[i].size(); ++y) {
        if (y) std::cout << " ";
        std::cout << f.factors[i].join(x, y);
      }
      std::cout << "\n";
    }
  }
  std::cout << "coordinates\n";
  for (int x = 0; x < a.size(); ++x) {
    int code = f.iso.to[x];
    std::vector<int> digits(f.factors.size());
    for (int k = static_cast<int>(f.factors.size()) - 1; k >= 0; --k) {
      digits[k] = code % f.factors[k].size();
      code /= f.factors[k].size();
    }
    std::cout << a.element_name(x) << " -> (";
    for (size_t k = 0; k < digits.size(); ++k) {
      if (k) std::cout << ",";
      std::cout << digits[k];
    }
    std::cout << ")\n";
  }
  return 0;
}

// "LIST:LIST" -> summand pair
slat::SummandPair split_pair(const slat::Semilattice& a, int c,
                             const std::string& spec_text) {
  size_t colon = spec_text.find(':');
  if (colon == std::string::npos)
    throw slat::Error("expected 'LIST:LIST', got '" + spec_text + "'");
  return slat::SummandPair{c, resolve_list(a, spec_text.substr(0, colon)),
                           resolve_list(a, spec_text.substr(colon + 1))};
}

int cmd_refine(const std::string& path, const std::string& c,
               const std::string& first, const std::string& second) {
  slat::Semilattice a = load(path);
  int base = resolve_element(a, c);
  slat::RefineResult r = slat::refine_join(a, split_pair(a, base, first),
                                           split_pair(a, base, second));
  std::cout << "met: " << show_block(a, r.met) << "\n";
  std::cout << "joined: " << show_block(a, r.joined) << "\n";
  std::cout << "refined pair decomposes: " << (r.verdict ? "yes" : "no") << "\n";
  return r.verdict ? 0 : 1;
}

int cmd_independence(const std::string& axiom, int max_n) {
  auto w = slat::independence_search(axiom, max_n);
  if (!w) {
    std::cout << "no witness up to " << max_n << " elements\n";
    return 1;
  }
  std::cout << "witness on " << w->a.size() << " elements\n";
  std::cout << slat::emit_slat(w->a);
  std::cout << "c = " << w->sp.c << "\n";
  std::cout << "I1 = " << show_block(w->a, w->sp.i1) << "\n";
  std::cout << "I2 = " << show_block(w->a, w->sp.i2) << "\n";
  const slat::AxiomVerdict* failed = nullptr;
  if (axiom == "Mod1") failed = &w->report.mod1;
  else if (axiom == "Mod2") failed = &w->report.mod2;
  else if (axiom == "Abs") failed = &w->report.abs;
  else if (axiom == "exi") failed = &w->report.exi;
  else failed = &w->report.onto;
  std::cout << show_axiom(w->a, axiom, *failed) << "\n";
  std::cout << "all other axioms hold\n";
  return 0;
}

int cmd_enumerate(int n) {
  std::vector<slat::Semilattice> corpus = slat::enumerate_semilattices(n);
  std::cout << "count: " << corpus.size() << "\n";
  for (size_t i = 0; i < corpus.size(); ++i) {
    std::cout << "structure " << i << "\n";
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (y) std::cout << " ";
        std::cout << corpus[i].join(x, y);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_dot(const std::string& path, const std::vector<std::string>& highlights) {
  slat::Semilattice a = load(path);
  std::vector<std::vector<int>> groups;
  for (const std::string& h : highlights) groups.push_back(resolve_list(a, h));
  std::cout << slat::emit_dot(a, groups);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite join-semilattice decomposition toolkit"};
  app.require_subcommand(1);

  std::string file, c = "0", i1, i2, first, second, axiom, strategy = "min-delta";
  int max_n = 0, enum_n = 0;
  std::vector<std::string> highlights;

  CLI::App* validate = app.add_subcommand("validate", "check the three semilattice laws");
  validate->add_option("file", file)->required();

  CLI::App* meets = app.add_subcommand("meets", "print the partial meet table ('-' = undefined)");
  meets->add_option("file", file)->required();

  CLI::App* congruences = app.add_subcommand("congruences", "list all join-compatible partitions");
  congruences->add_option("file", file)->required();

  CLI::App* pairs = app.add_subcommand("factor-pairs", "list complementary congruence pairs");
  pairs->add_option("file", file)->required();

  CLI::App* check = app.add_subcommand("check-sum", "test the decomposition axioms for c, I1, I2");
  check->add_option("file", file)->required();
  check->add_option("--c", c, "base element")->required();
  check->add_option("--i1", i1, "first summand, comma separated")->required();
  check->add_option("--i2", i2, "second summand, comma separated")->required();

  CLI::App* zero = app.add_subcommand("check-zero", "least-element criteria for a decomposition");
  zero->add_option("file", file)->required();
  zero->add_option("--i1", i1)->required();
  zero->add_option("--i2", i2)->required();

  CLI::App* one = app.add_subcommand("check-one", "greatest-element criteria for a decomposition");
  one->add_option("file", file)->required();
  one->add_option("--i1", i1)->required();
  one->add_option("--i2", i2)->required();

  CLI::App* factor = app.add_subcommand("factorize", "split into directly indecomposable factors");
  factor->add_option("file", file)->required();
  factor->add_option("--c", c, "base element (default 0)");
  factor->add_option("--strategy", strategy, "min-delta | first | last");

  CLI::App* refine = app.add_subcommand("refine", "join two decompositions into a common refinement");
  refine->add_option("file", file)->required();
  refine->add_option("--c", c, "shared base element")->required();
  refine->add_option("--first", first, "first pair as LIST:LIST")->required();
  refine->add_option("--second", second, "second pair as LIST:LIST")->required();

  CLI::App* indep = app.add_subcommand("independence", "search for a structure failing exactly one axiom");
  indep->add_option("--axiom", axiom, "Mod1 | Mod2 | Abs | exi | onto")->required();
  indep->add_option("--max-n", max_n, "largest carrier size to scan")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "all structures of one size up to isomorphism");
  enumerate->add_option("--n", enum_n, "carrier size")->required();

  CLI::App* dot = app.add_subcommand("dot", "Hasse diagram in DOT format");
  dot->add_option("file", file)->required();
  dot->add_option("--highlight", highlights, "subset to box into a cluster, comma separated");

  CLI11_PARSE(app, argc, argv);

  bool validating = validate->parsed();
  try {
    if (validating) return cmd_validate(file);
    if (meets->parsed()) return cmd_meets(file);
    if (congruences->parsed()) return cmd_congruences(file);
    if (pairs->parsed()) return cmd_factor_pairs(file);
    if (check->parsed()) return cmd_check_sum(file, c, i1, i2);
    if (zero->parsed()) return cmd_check_zero(file, i1, i2);
    if (one->parsed()) return cmd_check_one(file, i1, i2);
    if (factor->parsed()) return cmd_factorize(file, c, strategy);
    if (refine->parsed()) return cmd_refine(file, c, first, second);
    if (indep->parsed()) return cmd_independence(axiom, max_n);
    if (enumerate->parsed()) return cmd_enumerate(enum_n);
    if (dot->parsed()) return cmd_dot(file, highlights);
  } catch (const slat::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const slat::NoJoinExists& e) {
    if (validating) {
      std::cout << "not a join-semilattice: " << e.what() << "\n";
      return 1;
    }
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const slat::ValidationError& e) {
    if (validating) {
      std::cout << "not a join-semilattice: " << e.what() << "\n";
      return 1;
    }
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const slat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
