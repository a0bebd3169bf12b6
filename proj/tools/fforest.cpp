// Command-line surface for the factorization-forest toolkit: build and
// verify trees, inspect Green structure, run the minimal-height oracle,
// answer range-product queries and sweep the built-in semigroup zoo.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fforest/errors.hpp"
#include "fforest/io.hpp"
#include "fforest/oracle.hpp"
#include "fforest/range_product.hpp"
#include "fforest/rng.hpp"
#include "fforest/verify.hpp"
#include "fforest/version.hpp"
#include "fforest/zoo.hpp"

namespace {

using nlohmann::json;

struct WordSource {
  std::string inline_word;
  std::string word_file;
  std::size_t random_len = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;

  void attach(CLI::App* cmd) {
    auto* w = cmd->add_option("--word", inline_word, "word given inline");
    auto* f = cmd->add_option("--word-file", word_file,
                              "file containing the word (trailing newline ignored)");
    auto* r = cmd->add_option("--random", random_len,
                              "generate a random word of this length over the alphabet");
    auto* s = cmd->add_option("--seed", seed, "seed for --random");
    s->each([this](const std::string&) { seed_set = true; });
    w->excludes(f)->excludes(r);
    f->excludes(r);
    r->needs(s);
    cmd->callback([this, w, f, r] {
      if (w->count() + f->count() + r->count() != 1) {
        throw CLI::ValidationError(
            "exactly one of --word, --word-file, --random is required");
      }
    });
  }

  std::string resolve(const fforest::Homomorphism& phi) const {
    if (!word_file.empty()) {
      std::ifstream in(word_file);
      if (!in) throw fforest::ParseError("cannot open " + word_file);
      std::string w((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
      while (!w.empty() && (w.back() == '\n' || w.back() == '\r')) w.pop_back();
      return w;
    }
    if (random_len > 0) {
      fforest::SplitMix64 rng(seed);
      return fforest::random_word(rng, phi.alphabet(), random_len);
    }
    return inline_word;
  }

  json seed_field() const { return seed_set ? json(seed) : json(nullptr); }
};

void emit(json doc, const json& seed, const std::string& out_path) {
  doc["tool_version"] = std::string(fforest::kToolVersion);
  doc["seed"] = seed;
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw fforest::ParseError("cannot write " + out_path);
    out << doc.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw fforest::ParseError("cannot write " + out_path);
    out << text;
  }
}

int run_build(const std::string& hom_path, const WordSource& src,
              const std::string& format, const std::string& out_path) {
  const fforest::Homomorphism phi = fforest::load_homomorphism_file(hom_path);
  const fforest::GreenData green = fforest::compute_green(phi.semigroup());
  const std::string w = src.resolve(phi);
  const fforest::FactTree tree = fforest::build_forest(phi, green, w);
  if (format == "dot") {
    emit_text(fforest::forest_to_dot(tree, phi.semigroup()), out_path);
  } else if (format == "text") {
    const fforest::VerifyReport rep = fforest::verify_valid(tree, phi, green, w);
    emit_text("height " + std::to_string(rep.height) + "\nbound " +
                  std::to_string(rep.bound) + "\nvalid " +
                  (rep.valid ? std::string("true") : std::string("false")) + "\n",
              out_path);
  } else {
    emit(fforest::forest_to_json(tree, phi, green), src.seed_field(), out_path);
  }
  return 0;
}

int run_verify(const std::string& hom_path, const std::string& forest_path,
               bool enforce_bound, const std::string& out_path) {
  const fforest::Homomorphism phi = fforest::load_homomorphism_file(hom_path);
  const fforest::GreenData green = fforest::compute_green(phi.semigroup());
  std::ifstream in(forest_path);
  if (!in) throw fforest::ParseError("cannot open " + forest_path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw fforest::ParseError(forest_path + ": " + e.what());
  }
  const fforest::FactTree tree = fforest::forest_from_json(doc, phi);
  const fforest::VerifyReport rep =
      fforest::verify_valid(tree, phi, green, tree.word);
  emit(fforest::verify_report_to_json(rep), json(nullptr), out_path);
  if (!rep.valid) return 1;
  if (enforce_bound && !rep.within_bound()) return 1;
  return 0;
}

int run_green(const std::string& sg_path, const std::string& format,
              const std::string& out_path) {
  const fforest::Semigroup s = fforest::load_semigroup_file(sg_path);
  const fforest::GreenData green = fforest::compute_green(s);
  if (format == "dot") {
    emit_text(fforest::j_order_to_dot(s, green), out_path);
  } else {
    emit(fforest::eggbox_to_json(s, green), json(nullptr), out_path);
  }
  return 0;
}

int run_oracle(const std::string& hom_path, const WordSource& src,
               std::size_t max_len, const std::string& out_path) {
  const fforest::Homomorphism phi = fforest::load_homomorphism_file(hom_path);
  const fforest::GreenData green = fforest::compute_green(phi.semigroup());
  const std::string w = src.resolve(phi);
  const fforest::OracleResult res = fforest::min_height_forest(phi, w, max_len);
  emit(fforest::oracle_result_to_json(res, phi, green), src.seed_field(),
       out_path);
  return 0;
}

int run_query(const std::string& hom_path, const std::string& index_path,
              const std::string& inline_word, const std::string& range,
              bool batch) {
  const fforest::Homomorphism phi = fforest::load_homomorphism_file(hom_path);
  const fforest::GreenData green = fforest::compute_green(phi.semigroup());

  std::optional<fforest::ForestIndex> idx;
  if (!index_path.empty()) {
    std::ifstream in(index_path);
    if (!in) throw fforest::ParseError("cannot open " + index_path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw fforest::ParseError(index_path + ": " + e.what());
    }
    fforest::FactTree tree = fforest::forest_from_json(doc, phi);
    const fforest::VerifyReport rep =
        fforest::verify_valid(tree, phi, green, tree.word);
    if (!rep.valid) {
      std::cerr << "index tree fails verification\n";
      return 1;
    }
    idx.emplace(phi.semigroup(), std::move(tree));
  } else {
    idx.emplace(phi.semigroup(), fforest::build_forest(phi, green, inline_word));
  }

  auto answer = [&](const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
      throw fforest::ParseError("range must be i:j, got \"" + text + "\"");
    }
    std::size_t i = 0, j = 0;
    try {
      i = std::stoull(text.substr(0, colon));
      j = std::stoull(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw fforest::ParseError("range must be i:j, got \"" + text + "\"");
    }
    const fforest::Elem value = fforest::query(*idx, i, j);
    std::cout << phi.semigroup().element_name(value) << "\n";
  };

  if (batch) {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      answer(line);
    }
  } else {
    answer(range);
  }
  return 0;
}

int run_bench(std::size_t max_len, std::uint64_t seed, std::size_t rand_count,
              std::size_t rand_len, std::size_t rect_oracle_len,
              const std::string& out_path) {
  json rows = json::array();
  fforest::SplitMix64 rng(seed);
  for (const fforest::ZooEntry& entry : fforest::standard_zoo()) {
    const fforest::Homomorphism& phi = entry.hom;
    const fforest::GreenData green = fforest::compute_green(phi.semigroup());
    const int bound3s = 3 * static_cast<int>(phi.semigroup().size());

    int max_height = 0;
    bool all_valid = true;
    bool all_within = true;
    std::size_t words = 0;
    const std::size_t k = phi.alphabet().size();
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::size_t> digits(len, 0);
      std::string w(len, phi.alphabet()[0]);
      while (true) {
        for (std::size_t p = 0; p < len; ++p) w[p] = phi.alphabet()[digits[p]];
        const fforest::FactTree tree = fforest::build_forest(phi, green, w);
        const fforest::VerifyReport rep =
            fforest::verify_valid(tree, phi, green, w);
        ++words;
        max_height = std::max(max_height, rep.height);
        all_valid = all_valid && rep.valid;
        all_within = all_within && rep.within_bound();
        std::size_t p = 0;
        while (p < len && ++digits[p] == k) digits[p++] = 0;
        if (p == len) break;
      }
    }

    int rand_max_height = 0;
    for (std::size_t r = 0; r < rand_count; ++r) {
      const std::string w = fforest::random_word(rng, phi.alphabet(), rand_len);
      const fforest::FactTree tree = fforest::build_forest(phi, green, w);
      const fforest::VerifyReport rep = fforest::verify_valid(tree, phi, green, w);
      rand_max_height = std::max(rand_max_height, rep.height);
      all_valid = all_valid && rep.valid;
      all_within = all_within && rep.within_bound();
    }

    rows.push_back(json{{"semigroup", entry.name},
                        {"size", phi.semigroup().size()},
                        {"bound_3s", bound3s},
                        {"exhaustive_max_len", max_len},
                        {"exhaustive_words", words},
                        {"max_height", max_height},
                        {"random_words", rand_count},
                        {"random_len", rand_len},
                        {"random_max_height", rand_max_height},
                        {"all_valid", all_valid},
                        {"all_within_bound", all_within}});
  }

  // Informational only: best achievable heights on the 2x2 band over its
  // full element alphabet.
  int rect_max_min = 0;
  {
    const fforest::Semigroup band = fforest::rectangular_band(2, 2);
    const fforest::Homomorphism phi(band, {{'a', 0}, {'b', 1}, {'c', 2}, {'d', 3}});
    const std::size_t k = phi.alphabet().size();
    for (std::size_t len = 1; len <= rect_oracle_len; ++len) {
      std::vector<std::size_t> digits(len, 0);
      std::string w(len, phi.alphabet()[0]);
      while (true) {
        for (std::size_t p = 0; p < len; ++p) w[p] = phi.alphabet()[digits[p]];
        rect_max_min = std::max(
            rect_max_min,
            fforest::min_height_forest(phi, w, rect_oracle_len).min_height);
        std::size_t p = 0;
        while (p < len && ++digits[p] == k) digits[p++] = 0;
        if (p == len) break;
      }
    }
  }

  json doc{{"rows", std::move(rows)},
           {"rect_2_2_oracle",
            json{{"max_len", rect_oracle_len}, {"max_min_height", rect_max_min}}}};
  emit(std::move(doc), json(seed), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization forests for finite semigroups"};
  app.set_version_flag("--version", std::string(fforest::kToolVersion));
  app.require_subcommand(1);

  std::string hom_path, sg_path, forest_path, index_path, out_path;
  std::string format = "json";
  std::string range;
  bool enforce_bound = false;
  bool batch = false;
  std::size_t max_oracle_len = 12;
  std::size_t bench_max_len = 8;
  std::uint64_t bench_seed = 1;
  std::size_t bench_rand_count = 10;
  std::size_t bench_rand_len = 10000;
  std::size_t rect_oracle_len = 8;
  WordSource src;

  CLI::App* build = app.add_subcommand("build", "build a factorization tree");
  build->add_option("--hom", hom_path, "homomorphism file")->required();
  src.attach(build);
  build->add_option("--format", format, "json | dot | text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  build->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "verify a forest document");
  verify->add_option("--hom", hom_path, "homomorphism file")->required();
  verify->add_option("--forest", forest_path, "forest document")->required();
  verify->add_flag("--enforce-bound", enforce_bound,
                   "fail when the height exceeds the bound");
  verify->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* green = app.add_subcommand("green", "emit the eggbox structure");
  green->add_option("--semigroup", sg_path, "semigroup file")->required();
  green->add_option("--format", format, "json | dot")
      ->check(CLI::IsMember({"json", "dot"}));
  green->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* oracle = app.add_subcommand("oracle", "exact minimal tree height");
  oracle->add_option("--hom", hom_path, "homomorphism file")->required();
  src.attach(oracle);
  oracle->add_option("--max-oracle-len", max_oracle_len,
                     "refuse words longer than this");
  oracle->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* query = app.add_subcommand("query", "range product queries");
  query->add_option("--hom", hom_path, "homomorphism file")->required();
  auto* qi = query->add_option("--index", index_path, "forest document to query");
  auto* qw = query->add_option("--word", src.inline_word,
                               "word to preprocess and query");
  qi->excludes(qw);
  auto* qr = query->add_option("--range", range, "range i:j");
  auto* qb = query->add_flag("--batch", batch, "read ranges from stdin");
  qr->excludes(qb);
  query->callback([&] {
    if (qi->count() + qw->count() != 1) {
      throw CLI::ValidationError("exactly one of --index, --word is required");
    }
    if (qr->count() + qb->count() != 1) {
      throw CLI::ValidationError("exactly one of --range, --batch is required");
    }
  });

  CLI::App* bench = app.add_subcommand("bench", "sweep the built-in zoo");
  bench->add_option("--max-len", bench_max_len, "exhaustive word length limit");
  bench->add_option("--seed", bench_seed, "seed for the randomized sweep");
  bench->add_option("--rand-count", bench_rand_count, "random words per semigroup");
  bench->add_option("--rand-len", bench_rand_len, "random word length");
  bench->add_option("--rect-oracle-len", rect_oracle_len,
                    "oracle sweep length on the 2x2 band");
  bench->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return run_build(hom_path, src, format, out_path);
    if (verify->parsed()) {
      return run_verify(hom_path, forest_path, enforce_bound, out_path);
    }
    if (green->parsed()) return run_green(sg_path, format, out_path);
    if (oracle->parsed()) {
      return run_oracle(hom_path, src, max_oracle_len, out_path);
    }
    if (query->parsed()) {
      return run_query(hom_path, index_path, src.inline_word, range, batch);
    }
    if (bench->parsed()) {
      return run_bench(bench_max_len, bench_seed, bench_rand_count,
                       bench_rand_len, rect_oracle_len, out_path);
    }
  } catch (const fforest::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const fforest::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
