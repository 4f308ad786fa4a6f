// braid: command-line front-end for the braidkit engine.
//
// Every subcommand takes -n/--strands and words in the core grammar
// (signed decimals or letter aliases, separated by spaces or commas).
// --json switches to the documented wire formats, all carrying
// schema_version "1". Exit codes: 0 success, 1 domain error, 2 usage.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <stdexcept>
#include <string>

#include "braidkit/artin_action.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/classification.hpp"
#include "braidkit/combing.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/dehornoy.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/lattice.hpp"
#include "braidkit/normal_form.hpp"

using nlohmann::json;
using namespace braidkit;

namespace {

constexpr const char* kSchemaVersion = "1";

struct Options {
  int strands = 0;
  bool as_json = false;
  std::int64_t fuel = kDefaultFuel;
  std::size_t max_vertices = kDefaultVertexCap;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("-n,--strands", opt.strands, "strand count")->required();
  cmd->add_flag("--json", opt.as_json, "emit JSON output");
  cmd->allow_extras();  // word arguments, picked up via remaining()
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json with_version(json j) {
  j["schema_version"] = kSchemaVersion;
  return j;
}

void emit_bool(const Options& opt, bool value) {
  if (opt.as_json)
    emit(with_version({{"value", value}}));
  else
    std::cout << (value ? "true" : "false") << "\n";
}

void emit_word(const Options& opt, const BraidWord& w) {
  if (opt.as_json)
    emit(with_version({{"n", w.strands}, {"word", w.letters}}));
  else
    std::cout << serialize(w) << "\n";
}

std::string nf_text(const LeftNormalForm& f) {
  std::string out = "D^" + std::to_string(f.inf) + " |";
  for (const SimpleElement& a : f.factors) out += " [" + serialize(to_word(a)) + "]";
  return out;
}

BraidWord canonical(const BraidWord& w) { return nf_to_word(normal_form(w)); }

// Usage problems discovered inside callbacks (wrong argument counts).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Word arguments are taken from the unparsed remainder so that words
// beginning with '-' need no escaping.
std::vector<std::string> words_of(CLI::App* cmd, size_t lo, size_t hi) {
  std::vector<std::string> extras = cmd->remaining();
  if (extras.size() < lo || extras.size() > hi) {
    const std::string range = lo == hi ? std::to_string(lo)
                                       : std::to_string(lo) + ".." + std::to_string(hi);
    throw UsageError(cmd->get_name() + " expects " + range + " word argument(s), got " +
                     std::to_string(extras.size()));
  }
  return extras;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational braid group engine"};
  app.require_subcommand(1);

  Options opt;

  auto* nf_cmd = app.add_subcommand("nf", "left normal form");
  add_common(nf_cmd, opt);
  nf_cmd->callback([&] {
    const auto words = words_of(nf_cmd, 1, 1);
    const LeftNormalForm f = normal_form(parse_word(words[0], opt.strands));
    if (opt.as_json)
      emit(with_version(to_json(f)));
    else
      std::cout << nf_text(f) << "\n";
  });

  auto* eq_cmd = app.add_subcommand("eq", "word problem: are two words the same braid");
  add_common(eq_cmd, opt);
  eq_cmd->callback([&] {
    const auto words = words_of(eq_cmd, 2, 2);
    emit_bool(opt, equal(parse_word(words[0], opt.strands),
                         parse_word(words[1], opt.strands)));
  });

  auto* gcd_cmd = app.add_subcommand("gcd", "greatest common divisor (prefix order)");
  add_common(gcd_cmd, opt);
  gcd_cmd->callback([&] {
    const auto words = words_of(gcd_cmd, 2, 2);
    emit_word(opt, canonical(gcd(parse_word(words[0], opt.strands),
                                 parse_word(words[1], opt.strands))));
  });

  auto* lcm_cmd = app.add_subcommand("lcm", "least common multiple (prefix order)");
  add_common(lcm_cmd, opt);
  lcm_cmd->callback([&] {
    const auto words = words_of(lcm_cmd, 2, 2);
    emit_word(opt, canonical(lcm(parse_word(words[0], opt.strands),
                                 parse_word(words[1], opt.strands))));
  });

  auto* div_cmd = app.add_subcommand("divides", "prefix-order divisibility");
  add_common(div_cmd, opt);
  div_cmd->callback([&] {
    const auto words = words_of(div_cmd, 2, 2);
    emit_bool(opt, prefix_divides(parse_word(words[0], opt.strands),
                                  parse_word(words[1], opt.strands)));
  });

  auto* conj_cmd = app.add_subcommand("conj", "conjugacy decision and search");
  add_common(conj_cmd, opt);
  conj_cmd->add_option("--max-vertices", opt.max_vertices, "sliding-circuit vertex cap");
  conj_cmd->callback([&] {
    const auto words = words_of(conj_cmd, 2, 2);
    const auto c = are_conjugate(parse_word(words[0], opt.strands),
                                 parse_word(words[1], opt.strands), opt.max_vertices);
    if (opt.as_json) {
      json j = {{"conjugate", c.has_value()}, {"conjugator", nullptr}};
      if (c) j["conjugator"] = canonical(*c).letters;
      emit(with_version(j));
    } else if (c) {
      std::cout << "yes\n" << serialize(canonical(*c)) << "\n";
    } else {
      std::cout << "no\n";
    }
  });

  auto* sc_cmd = app.add_subcommand("sc", "sliding circuit graph");
  add_common(sc_cmd, opt);
  sc_cmd->add_option("--max-vertices", opt.max_vertices, "sliding-circuit vertex cap");
  sc_cmd->callback([&] {
    const auto words = words_of(sc_cmd, 1, 1);
    emit(with_version(to_json(sliding_circuits(parse_word(words[0], opt.strands),
                                               opt.max_vertices))));
  });

  auto* slide_cmd = app.add_subcommand("slide", "iterated cyclic sliding to a circuit");
  add_common(slide_cmd, opt);
  slide_cmd->callback([&] {
    const auto words = words_of(slide_cmd, 1, 1);
    const SlideResult r = slide_to_circuit(parse_word(words[0], opt.strands));
    if (opt.as_json) {
      emit(with_version({{"normal_form", to_json(r.representative)},
                         {"conjugator", canonical(r.conjugator).letters},
                         {"period", r.period}}));
    } else {
      std::cout << nf_text(r.representative) << "\n"
                << serialize(canonical(r.conjugator)) << "\n"
                << r.period << "\n";
    }
  });

  auto* sign_cmd = app.add_subcommand("sign", "Dehornoy order sign");
  add_common(sign_cmd, opt);
  sign_cmd->add_option("--fuel", opt.fuel, "handle-reduction step bound");
  sign_cmd->callback([&] {
    const auto words = words_of(sign_cmd, 1, 1);
    const OrderSign s = sign(parse_word(words[0], opt.strands), opt.fuel);
    const char* text = s == OrderSign::zero ? "0" : s == OrderSign::positive ? "+" : "-";
    if (opt.as_json)
      emit(with_version({{"sign", text}}));
    else
      std::cout << text << "\n";
  });

  auto* cmp_cmd = app.add_subcommand("cmp", "compare in the Dehornoy order");
  add_common(cmp_cmd, opt);
  cmp_cmd->add_option("--fuel", opt.fuel, "handle-reduction step bound");
  cmp_cmd->callback([&] {
    const auto words = words_of(cmp_cmd, 2, 2);
    const BraidWord a = parse_word(words[0], opt.strands);
    const BraidWord b = parse_word(words[1], opt.strands);
    const OrderSign s = sign(concat(invert(a), b), opt.fuel);
    const char* text = s == OrderSign::zero ? "=" : s == OrderSign::positive ? "<" : ">";
    if (opt.as_json)
      emit(with_version({{"result", text}}));
    else
      std::cout << text << "\n";
  });

  auto* perm_cmd = app.add_subcommand("perm", "underlying permutation");
  add_common(perm_cmd, opt);
  perm_cmd->callback([&] {
    const auto words = words_of(perm_cmd, 1, 1);
    const Permutation p = permutation(parse_word(words[0], opt.strands));
    if (opt.as_json) {
      emit(with_version({{"images", p.images()}}));
    } else {
      for (int k = 1; k <= p.size(); ++k) std::cout << (k > 1 ? " " : "") << p.apply(k);
      std::cout << "\n";
    }
  });

  auto* exp_cmd = app.add_subcommand("expsum", "exponent sum");
  add_common(exp_cmd, opt);
  exp_cmd->callback([&] {
    const auto words = words_of(exp_cmd, 1, 1);
    const int s = exponent_sum(parse_word(words[0], opt.strands));
    if (opt.as_json)
      emit(with_version({{"value", s}}));
    else
      std::cout << s << "\n";
  });

  auto* per_cmd = app.add_subcommand("periodic", "periodicity test");
  add_common(per_cmd, opt);
  per_cmd->add_option("--max-vertices", opt.max_vertices, "sliding-circuit vertex cap");
  per_cmd->callback([&] {
    const auto words = words_of(per_cmd, 1, 1);
    const auto p = is_periodic(parse_word(words[0], opt.strands), opt.max_vertices);
    if (opt.as_json) {
      json j = {{"periodic", p.has_value()}, {"base", nullptr}, {"power", nullptr}};
      if (p) {
        j["base"] = p->base == PeriodicType::Base::delta ? "delta" : "epsilon";
        j["power"] = p->power;
      }
      emit(with_version(j));
    } else if (p) {
      std::cout << (p->base == PeriodicType::Base::delta ? "delta" : "epsilon") << " "
                << p->power << "\n";
    } else {
      std::cout << "no\n";
    }
  });

  auto* cen_cmd = app.add_subcommand("central", "center membership");
  add_common(cen_cmd, opt);
  cen_cmd->callback([&] {
    const auto words = words_of(cen_cmd, 1, 1);
    const bool c = is_central(parse_word(words[0], opt.strands));
    if (opt.as_json)
      emit(with_version({{"value", c}}));
    else
      std::cout << (c ? "yes" : "no") << "\n";
  });

  auto* comb_cmd = app.add_subcommand("comb", "pure-braid combing coordinates");
  add_common(comb_cmd, opt);
  comb_cmd->callback([&] {
    const auto words = words_of(comb_cmd, 1, 1);
    emit(with_version(to_json(comb(parse_word(words[0], opt.strands)))));
  });

  auto* rm_cmd = app.add_subcommand("rmstrand", "remove the last strand");
  add_common(rm_cmd, opt);
  rm_cmd->callback([&] {
    const auto words = words_of(rm_cmd, 1, 1);
    emit_word(opt, remove_last_strand(parse_word(words[0], opt.strands)));
  });

  auto* act_cmd = app.add_subcommand("artin-act", "Artin action on a free word");
  add_common(act_cmd, opt);
  act_cmd->callback([&] {
    const auto words = words_of(act_cmd, 2, 2);
    const FreeWord out = act(parse_word(words[0], opt.strands),
                             parse_free_word(words[1], opt.strands));
    if (opt.as_json)
      emit(with_version({{"rank", out.rank}, {"word", out.letters}}));
    else
      std::cout << serialize(out) << "\n";
  });

  auto* aut_cmd = app.add_subcommand("is-braid-aut",
                                     "Artin recognition of a free-group endomorphism");
  add_common(aut_cmd, opt);
  aut_cmd->callback([&] {
    const auto words = words_of(aut_cmd, 1, 64);
    if (static_cast<int>(words.size()) != opt.strands)
      throw UsageError("is-braid-aut expects exactly n = " + std::to_string(opt.strands) +
                       " image words, got " + std::to_string(words.size()));
    std::vector<FreeWord> images;
    for (const std::string& text : words)
      images.push_back(parse_free_word(text, opt.strands));
    emit_bool(opt, is_braid_automorphism(images));
  });

  auto* tor_cmd = app.add_subcommand("torsion-probe",
                                     "gcd(1, x, ..., x^{k-1}) torsion witness");
  add_common(tor_cmd, opt);
  tor_cmd->callback([&] {
    const auto words = words_of(tor_cmd, 2, 2);
    const BraidWord x = parse_word(words[0], opt.strands);
    int k = 0;
    try {
      k = std::stoi(words[1]);
    } catch (const std::exception&) {
      throw UsageError("torsion-probe: k must be a positive integer");
    }
    if (k < 1) throw UsageError("torsion-probe: k must be a positive integer");
    const BraidWord d = torsion_witness(x, k);
    const bool fixed = equal(concat(x, d), d);
    if (opt.as_json) {
      emit(with_version({{"witness", canonical(d).letters}, {"fixed", fixed}}));
    } else {
      std::cout << serialize(canonical(d)) << "\n"
                << (fixed ? "fixed" : "moved") << "\n";
    }
  });

  auto* zgen_cmd = app.add_subcommand("centralizer", "centralizer generators");
  add_common(zgen_cmd, opt);
  zgen_cmd->add_option("--max-vertices", opt.max_vertices, "sliding-circuit vertex cap");
  zgen_cmd->callback([&] {
    const auto words = words_of(zgen_cmd, 1, 1);
    const auto gens = centralizer_generators(parse_word(words[0], opt.strands),
                                             opt.max_vertices);
    if (opt.as_json) {
      json arr = json::array();
      for (const BraidWord& g : gens) arr.push_back(canonical(g).letters);
      emit(with_version({{"n", opt.strands}, {"generators", arr}}));
    } else {
      for (const BraidWord& g : gens) std::cout << serialize(canonical(g)) << "\n";
    }
  });

  const auto list_subcommands = [&app] {
    std::cerr << "valid subcommands:";
    for (const CLI::App* sub : app.get_subcommands({})) std::cerr << " " << sub->get_name();
    std::cerr << "\n";
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    list_subcommands();
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    list_subcommands();
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
