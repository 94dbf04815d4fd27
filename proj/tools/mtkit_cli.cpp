// mtkit command-line front end.
//
// Exit status: 0 on success or when a hypothesis holds, 1 when validation
// fails or a hypothesis is refuted (a witness is printed), 2 on input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtkit/mtkit.hpp"

namespace {

using namespace mtkit;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

/// Thrown for bad flags or inputs that are not a parse error of a file.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, machine };

struct Options {
  std::string input;
  bool as_frame = false;
  Format format = Format::text;
  std::optional<std::size_t> topologies, posets, frames;
  std::string predicates;
  std::string hypothesis;
  std::string export_path;
  bool no_cap = false;
};

std::size_t element_cap() {
  const char* env = std::getenv("MTKIT_MAX_ELEMENTS");
  if (env == nullptr || *env == '\0') return kMaxLatticeElements;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > static_cast<long>(kMaxLatticeElements)) {
    throw UsageError("MTKIT_MAX_ELEMENTS must be an integer in 1.." +
                     std::to_string(kMaxLatticeElements));
  }
  return static_cast<std::size_t>(v);
}

void check_cap(std::size_t elements, const std::string& what) {
  const auto cap = element_cap();
  if (elements > cap) {
    throw CapacityExceeded(what + " has " + std::to_string(elements) +
                           " elements, above the cap of " + std::to_string(cap));
  }
}

std::string join_sets(const std::vector<AtomSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? " " : "") + format_atoms(sets[i]);
  return out;
}

std::string join_ids(const std::vector<Element>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + std::to_string(ids[i]);
  return out;
}

std::string format_elements(ElementSet s) { return "{" + join_ids(to_vector(s)) + "}"; }

/// Input file as either an MT-algebra or a poset.
struct Input {
  std::optional<MTAlgebra> mt;
  std::optional<FinitePoset> poset;
};

Input load(const std::string& path) {
  const auto text = read_file(path);
  std::istringstream probe(text);
  Input in;
  if (sniff(probe, path) == FileKind::mt) {
    in.mt = parse_mt(text, path);
    check_cap(in.mt->opens().size(), "O(M)");
  } else {
    in.poset = parse_poset(text, path);
    check_cap(in.poset->size(), "poset");
  }
  return in;
}

FiniteLattice load_frame(const Input& in) {
  auto L = validate_lattice(*in.poset);
  FrameView view(L);
  return L;
}

void require_frame_flag(const Input& in, const Options& o) {
  if (in.poset && !o.as_frame) throw UsageError("poset input needs --as-frame for this command");
  if (in.mt && o.as_frame) throw UsageError("--as-frame applies to poset files only");
}

/// Accepts files holding several structures, such as an --export corpus, and
/// reports one line per structure.
int cmd_validate(const Options& o) {
  const auto text = read_file(o.input);
  std::istringstream probe(text), in(text);
  if (sniff(probe, o.input) == FileKind::mt) {
    if (o.as_frame) throw UsageError("--as-frame applies to poset files only");
    for (const auto& M : read_mts(in, o.input)) {
      check_cap(M.opens().size(), "O(M)");
      std::cout << "valid mt atoms=" << M.atom_count() << " opens=" << M.opens().size() << '\n';
    }
    return kOk;
  }
  for (const auto& p : read_posets(in, o.input)) {
    check_cap(p.size(), "poset");
    if (!o.as_frame) {
      std::cout << "valid poset size=" << p.size() << '\n';
      continue;
    }
    const auto L = load_frame(Input{std::nullopt, p});
    std::cout << "valid frame size=" << L.size() << '\n';
  }
  return kOk;
}

void print_profile(const Classification& c, Format f) {
  std::size_t width = 0;
  for (auto n : AxiomProfile::kNames) width = std::max(width, n.size());
  for (auto n : AxiomProfile::kNames) {
    const char* v = *c.profile.get(n) ? "true" : "false";
    if (f == Format::machine) {
      std::cout << n << '=' << v << '\n';
    } else {
      std::cout << n << std::string(width - n.size() + 2, ' ') << v << '\n';
    }
  }
  for (const auto& w : c.witnesses) {
    if (f == Format::machine) {
      std::cout << "witness." << w.rule << '=' << join_sets(w.args) << '\n';
    } else {
      std::cout << "witness " << w.rule << ": " << join_sets(w.args) << '\n';
    }
  }
}

int cmd_classify(const Options& o) {
  const auto in = load(o.input);
  require_frame_flag(in, o);
  if (in.mt) {
    if (o.format == Format::text) {
      std::cout << "# " << in.mt->atom_count() << " atoms, " << in.mt->opens().size()
                << " opens\n";
    }
    print_profile(classify_with_witnesses(*in.mt), o.format);
    return kOk;
  }
  const auto L = load_frame(in);
  const auto env = funayama_of_frame(L);
  if (o.format == Format::text) {
    std::cout << "# envelope of a frame with " << L.size() << " elements: "
              << env.envelope.atom_count() << " atoms\n";
  }
  print_profile(classify_with_witnesses(env.envelope), o.format);
  return kOk;
}

int cmd_envelope(const Options& o) {
  const auto in = load(o.input);
  require_frame_flag(in, o);
  const auto result = in.mt ? funayama_of_raney(raney_of_mt(*in.mt)) : funayama_of_frame(load_frame(in));
  std::cout << write_mt(result.envelope);
  const auto& opens = result.envelope.opens();
  for (Element l = 0; l < result.unit.source().size(); ++l) {
    std::cout << "# open " << l << " -> " << format_atoms(opens[result.unit(l)]) << '\n';
  }
  return kOk;
}

int cmd_raney(const Options& o) {
  const auto in = load(o.input);
  require_frame_flag(in, o);
  const auto R = in.mt ? raney_of_mt(*in.mt) : filt_se_extension(load_frame(in));
  const auto& C = R.coframe();
  const auto flags = raney_flags(R);
  const auto cjp = completely_join_primes(C);
  const bool machine = o.format == Format::machine;
  auto kv = [&](const std::string& k, const std::string& v) {
    std::cout << k << (machine ? "=" : ": ") << v << '\n';
  };
  kv("coframe_size", std::to_string(C.size()));
  kv("frame_size", std::to_string(R.frame().size()));
  kv("frame_image", format_elements(R.embedding().image()));
  kv("cjp", format_elements(cjp));
  kv("spatial", flags.spatial ? "true" : "false");
  kv("sober", flags.sober ? "true" : "false");
  if (in.mt) {
    const auto sat = saturated_elements(*in.mt);
    for_each_bit(cjp, [&](Element p) {
      const auto x = cjp_to_atom(*in.mt, sat[p]);
      kv("cjp_to_atom " + format_atoms(sat[p]), format_atoms(x));
    });
  }
  return kOk;
}

/// The corpus selected by --topologies / --posets / --frames.
Corpus select_corpus(const Options& o) {
  const int chosen = (o.topologies ? 1 : 0) + (o.posets ? 1 : 0) + (o.frames ? 1 : 0);
  if (chosen != 1) throw UsageError("choose exactly one of --topologies, --posets, --frames");
  if (o.topologies) {
    if (*o.topologies > 4 && !o.no_cap) throw UsageError("--topologies above 4 needs --no-cap");
    if (*o.topologies > 4) std::cerr << "warning: large topology corpus\n";
    return enumerate_topologies(*o.topologies);
  }
  const auto n = o.posets ? *o.posets : *o.frames;
  if (n > 5 && !o.no_cap) throw UsageError("poset corpora above 5 points need --no-cap");
  return o.posets ? enumerate_poset_corpus(n) : frames_from_posets(n);
}

std::string write_item(const Corpus& c, std::size_t i) {
  return c.kind == CorpusKind::topologies ? write_mt(c.algebras[i]) : write_poset(c.posets[i]);
}

void export_corpus(const Corpus& c, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  for (std::size_t i = 0; i < c.size(); ++i) out << "# " << c.item_id(i) << '\n' << write_item(c, i);
}

std::vector<std::string> split_predicates(const std::string& s, CorpusKind kind) {
  if (s.empty()) return predicate_names(kind);
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) throw UsageError("empty predicate name");
    out.push_back(item);
  }
  return out;
}

int cmd_atlas(const Options& o) {
  const auto corpus = select_corpus(o);
  export_corpus(corpus, o.export_path);
  const auto report = atlas(corpus, split_predicates(o.predicates, corpus.kind));
  if (o.format == Format::text) std::cout << report.text();
  std::cout << report.machine();
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const auto corpus = select_corpus(o);
  export_corpus(corpus, o.export_path);
  if (o.format == Format::machine) {
    std::cout << "kind=" << to_string(corpus.kind) << " n=" << corpus.n
              << " count=" << corpus.size() << '\n';
  } else {
    std::cout << corpus.size() << ' ' << to_string(corpus.kind) << " on " << corpus.n
              << " points\n";
  }
  return kOk;
}

int cmd_search(const Options& o) {
  if (o.hypothesis.empty()) throw UsageError("search needs --hypothesis P=>Q");
  const auto corpus = select_corpus(o);
  const auto hit = counterexample_search(corpus, parse_hypothesis(o.hypothesis));
  if (!hit) {
    std::cout << o.hypothesis << " holds\n";
    return kOk;
  }
  std::cout << o.hypothesis << " refuted:" << corpus.item_id(*hit) << '\n' << write_item(corpus, *hit);
  return kRefuted;
}

void add_corpus_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--topologies", o.topologies, "topologies on N labeled points");
  cmd->add_option("--posets", o.posets, "labeled posets on N points");
  cmd->add_option("--frames", o.frames, "downset frames of labeled posets on N points");
  cmd->add_flag("--no-cap", o.no_cap, "allow corpora above the default size caps");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite MT-algebras, frames and Raney extensions"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"machine", Format::machine}};

  struct Verb {
    const char* name;
    const char* help;
    bool file;
    int (*run)(const Options&);
  };
  const Verb verbs[] = {
      {"validate", "validate an MT-algebra or poset file", true, cmd_validate},
      {"classify", "print the axiom profile with witnesses", true, cmd_classify},
      {"envelope", "Funayama envelope of a frame or of R(M)", true, cmd_envelope},
      {"raney", "Raney extension of an MT-algebra or frame", true, cmd_raney},
      {"atlas", "implication matrix over a corpus", false, cmd_atlas},
      {"enumerate", "count and export a corpus", false, cmd_enumerate},
      {"search", "least counterexample to P=>Q in a corpus", false, cmd_search},
  };
  std::map<CLI::App*, int (*)(const Options&)> dispatch;
  for (const auto& v : verbs) {
    auto* cmd = app.add_subcommand(v.name, v.help);
    cmd->add_option("--format", o.format, "text or machine")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->type_name("{text,machine}");
    if (v.file) {
      cmd->add_option("file", o.input, "input file")->required()->check(CLI::ExistingFile);
      cmd->add_flag("--as-frame", o.as_frame, "read the poset file as a frame");
    } else {
      add_corpus_flags(cmd, o);
      cmd->add_option("--export", o.export_path, "write the corpus to this file");
    }
    if (std::string(v.name) == "atlas") {
      cmd->add_option("--predicates", o.predicates, "comma-separated predicate names");
    }
    if (std::string(v.name) == "search") {
      cmd->add_option("--hypothesis", o.hypothesis, "implication P=>Q, with & for conjunction");
    }
    dispatch[cmd] = v.run;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    for (auto* sub : app.get_subcommands()) return dispatch.at(sub)(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotATopology& e) {
    std::cout << "invalid: " << e.what() << "; witness " << join_sets(e.witness()) << '\n';
  } catch (const NotAPoset& e) {
    std::cout << "invalid: " << e.what() << "; witness " << join_ids(e.witness()) << '\n';
  } catch (const RaneyError& e) {
    std::cout << "invalid: " << e.what() << "; witness " << join_ids(e.witness()) << '\n';
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << '\n';
  }
  return kRefuted;
}
