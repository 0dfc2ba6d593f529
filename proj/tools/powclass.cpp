#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "powclass.hpp"

#ifndef POWCLASS_DEFAULT_CORPUS
#define POWCLASS_DEFAULT_CORPUS "data/corpus.json"
#endif

namespace {

using namespace powclass;

constexpr int kExitFailedRows = 1;
constexpr int kExitInfrastructure = 2;

std::string default_corpus_path() {
  if (const char* env = std::getenv("POWCLASS_CORPUS"); env && *env) return env;
  return POWCLASS_DEFAULT_CORPUS;
}

std::string join_orders(const std::vector<std::size_t>& orders) {
  std::string out = "[";
  for (std::size_t i = 0; i < orders.size(); ++i) out += (i ? ", " : "") + std::to_string(orders[i]);
  return out + "]";
}

CorpusEntry find_group(const std::string& ref, const std::string& corpus_path) {
  if (std::filesystem::is_regular_file(ref)) {
    auto entries = load_corpus(ref);
    if (entries.empty()) throw Error(ErrorKind::UnknownGroup, ref + " holds no groups");
    return entries.front();
  }
  std::vector<CorpusEntry> corpus;
  if (std::filesystem::is_regular_file(corpus_path)) corpus = load_corpus(corpus_path);
  return resolve_group(ref, corpus);
}

void analyze_prime(const CorpusEntry& entry, unsigned p, std::ostream& out) {
  const auto& g = entry.group;
  PrimeContext ctx(g, p, Limits{});
  const auto& prof = ctx.profile();
  out << "prime " << p << "\n";
  out << "  sylow order: " << ctx.sylow().order() << "\n";
  out << "  pwc: " << prof.pwc << "\n";
  out << "  upper eta-series orders: " << join_orders(prof.eta_series.orders()) << "\n";
  out << "  powerful: " << (prof.is_powerful ? "yes" : "no")
      << ", small powerful class: " << (prof.small_powerful_class ? "yes" : "no") << "\n";
  if (is_power_of(g->order(), p)) {
    const auto z = upper_central_series(g);
    bool same = z.size() == prof.eta_series.size();
    for (std::size_t i = 0; same && i < z.size(); ++i) same = z[i] == prof.eta_series[i];
    out << "  upper central series orders: " << join_orders(z.orders()) << "\n";
    out << "  eta_i = Z_i for all i: " << (same ? "yes" : "no") << "\n";
  }
  const auto& ps = ctx.p_series();
  out << "  upper p-series orders: " << join_orders(ps.chain.orders()) << "\n";
  if (ps.p_length) {
    out << "  l_p: " << *ps.p_length << "\n";
  } else {
    out << "  l_p: undefined (not " << p << "-solvable)\n";
  }
  out << "  " << p << "-nilpotent: " << (is_p_nilpotent(g, p) ? "yes" : "no") << "\n";
  if (g->order() <= 2000) {
    const auto& w = ctx.eta_in_g();
    out << "  eta(P) weakly closed: " << (is_weakly_closed(w, ctx.sylow(), g).holds ? "yes" : "no")
        << ", strongly closed: " << (is_strongly_closed(w, ctx.sylow(), g).holds ? "yes" : "no") << "\n";
  }
}

int cmd_analyze(const std::string& ref, const std::vector<unsigned>& primes, const std::string& corpus_path) {
  const CorpusEntry entry = find_group(ref, corpus_path);
  const auto& g = entry.group;
  std::cout << "group " << g->label() << "\n";
  std::cout << "  order: " << g->order() << ", degree: " << g->degree() << "\n";
  const auto cls = nilpotency_class(g);
  std::cout << "  nilpotency class: " << (cls ? std::to_string(*cls) : "not nilpotent") << "\n";
  std::cout << "  tags:";
  for (const auto& t : entry.tags) std::cout << " " << t;
  std::cout << "\n";
  std::vector<unsigned> ps = primes.empty() ? entry.primes_of_interest : primes;
  for (unsigned p : ps) {
    if (!is_prime(p)) throw Error(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
    analyze_prime(entry, p, std::cout);
  }
  return 0;
}

std::vector<std::string> parse_suites(const std::string& spec) {
  if (spec == "all") return suite_ids();
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string id;
  while (std::getline(ss, id, ',')) {
    const auto& known = suite_ids();
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw Error(ErrorKind::BadParameter, "unknown suite " + id);
    }
    out.push_back(id);
  }
  if (out.empty()) throw Error(ErrorKind::BadParameter, "no suite selected");
  return out;
}

int cmd_verify(const std::string& suite, const std::string& corpus_path, const std::string& format,
               unsigned jobs, const std::string& output) {
  const auto suites = parse_suites(suite);
  const auto corpus = load_corpus(corpus_path);
  if (corpus.empty()) throw Error(ErrorKind::ParseError, corpus_path + ": corpus holds no groups");
  HarnessOptions opts;
  opts.jobs = jobs;
  const auto report = run_verification(corpus, suites, opts);
  std::string body = format == "json" ? format_json(report) : format == "csv" ? format_csv(report)
                                                                             : format_text(report);
  if (output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(output);
    if (!out) throw Error(ErrorKind::ParseError, output + ": cannot write report");
    out << body;
  }
  const auto s = report.summary();
  std::cerr << summary_line(s) << "\n";
  return s.failed == 0 ? 0 : kExitFailedRows;
}

int cmd_corpus_list(const std::string& corpus_path, const std::string& format) {
  const auto corpus = load_corpus(corpus_path);
  if (format == "json") {
    std::cout << serialize_corpus(corpus);
    return 0;
  }
  std::size_t w = 5;
  for (const auto& e : corpus) w = std::max(w, e.label().size());
  for (const auto& e : corpus) {
    std::string label = e.label();
    label.resize(w, ' ');
    std::string tags;
    for (const auto& t : e.tags) tags += (tags.empty() ? "" : ",") + t;
    std::cout << label << "  order=" << e.group->order() << "  degree=" << e.group->degree()
              << "  primes=";
    for (std::size_t i = 0; i < e.primes_of_interest.size(); ++i) {
      std::cout << (i ? "," : "") << e.primes_of_interest[i];
    }
    std::cout << "  tags=" << tags << "\n";
  }
  std::cout << corpus.size() << " entries\n";
  return 0;
}

int cmd_corpus_export(const std::string& output) {
  const auto corpus = build_default_corpus();
  if (output.empty()) {
    std::cout << serialize_corpus(corpus);
  } else {
    save_corpus(corpus, output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Powerful class, eta-series and transfer checks for finite permutation groups"};
  app.require_subcommand(1);

  std::string corpus_path = default_corpus_path();

  auto* analyze = app.add_subcommand("analyze", "Print the eta and p-series profile of a group");
  std::string ref;
  std::vector<unsigned> primes;
  analyze->add_option("group", ref, "Corpus label, built-in name or corpus file")->required();
  analyze->add_option("--prime,-p", primes, "Prime(s) to analyze (default: all divisors of |G|)");
  analyze->add_option("--corpus", corpus_path, "Corpus file");

  auto* verify = app.add_subcommand("verify", "Run theorem checks over a corpus");
  std::string suite = "all";
  std::string format = "text";
  unsigned jobs = 1;
  std::string output;
  verify->add_option("--suite", suite, "all, or comma-separated theorem ids");
  verify->add_option("--corpus", corpus_path, "Corpus file");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--jobs,-j", jobs, "Worker threads (parallel across groups)")->check(CLI::PositiveNumber);
  verify->add_option("--output,-o", output, "Write the report here instead of stdout");

  auto* corpus = app.add_subcommand("corpus", "Inspect or regenerate the corpus");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "List entries with recomputed tags");
  std::string list_format = "text";
  list->add_option("--format", list_format, "Listing format")->check(CLI::IsMember({"text", "json"}));
  list->add_option("--corpus", corpus_path, "Corpus file");
  auto* exporter = corpus->add_subcommand("export", "Write the built-in default corpus");
  std::string export_path;
  exporter->add_option("--output,-o", export_path, "Destination file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInfrastructure;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(ref, primes, corpus_path);
    if (verify->parsed()) return cmd_verify(suite, corpus_path, format, jobs, output);
    if (list->parsed()) return cmd_corpus_list(corpus_path, list_format);
    if (exporter->parsed()) return cmd_corpus_export(export_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfrastructure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfrastructure;
  }
  return kExitInfrastructure;
}
