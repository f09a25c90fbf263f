// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aritygap/aritygap.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailures = 3;

struct FunctionDeleter {
  void operator()(ag_function* f) const { ag_function_free(f); }
};
using FunctionPtr = std::unique_ptr<ag_function, FunctionDeleter>;

struct StringDeleter {
  void operator()(char* s) const { ag_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to stop the command with a given exit code after a message.
struct Exit {
  int code;
};

int exit_code_for(ag_status status) {
  switch (status) {
    case AG_OK: return kExitOk;
    case AG_ERR_INVALID_ARGUMENT:
    case AG_ERR_PARSE: return kExitUsage;
    default: return kExitDomain;
  }
}

[[noreturn]] void die(ag_status status) {
  std::cerr << "aritygap: " << ag_last_error() << '\n';
  throw Exit{exit_code_for(status)};
}

void check(ag_status status) {
  if (status != AG_OK) die(status);
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

struct Io {
  std::string in;
  std::string out;

  std::string read_all() const {
    if (in.empty() || in == "-") {
      return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream file(in, std::ios::binary);
    if (!file) {
      std::cerr << "aritygap: cannot open " << in << '\n';
      throw Exit{kExitUsage};
    }
    return std::string(std::istreambuf_iterator<char>(file), {});
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) {
        std::cerr << "aritygap: cannot write " << path << '\n';
        throw Exit{kExitUsage};
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_function(std::ostream& out, const ag_function* f) {
  char* text = nullptr;
  check(ag_function_render(f, 0, &text));
  out << take(text) << '\n';
}

// Applies `per_function` to every function read from the input. Domain errors
// produce an `error=<code>` line and the stream continues; the exit code is 1
// if any occurred. Parse errors stop at once with exit 2.
template <class Fn>
int for_each_function(const Io& io, Fn&& per_function) {
  const std::string text = io.read_all();
  Output output(io.out);
  std::ostream& out = output.stream();
  ag_reader* raw = nullptr;
  check(ag_reader_create(text.data(), text.size(), &raw));
  std::unique_ptr<ag_reader, void (*)(ag_reader*)> reader(raw, ag_reader_free);

  int code = kExitOk;
  while (true) {
    ag_function* next = nullptr;
    const ag_status read = ag_reader_next(reader.get(), &next);
    if (read != AG_OK) {
      out.flush();
      die(read);
    }
    if (!next) break;
    FunctionPtr f(next);
    std::string line;
    const ag_status status = per_function(f.get(), line);
    if (status == AG_OK) {
      out << line << '\n';
      continue;
    }
    if (exit_code_for(status) == kExitUsage) {
      out.flush();
      die(status);
    }
    std::cerr << "aritygap: " << ag_last_error() << '\n';
    out << "error=" << ag_status_name(status) << '\n';
    code = kExitDomain;
  }
  return code;
}

std::vector<size_t> to_zero_based(const std::vector<size_t>& slots, const char* flag) {
  std::vector<size_t> out;
  for (const auto s : slots) {
    if (s == 0) {
      std::cerr << "aritygap: " << flag << " slots are numbered from 1\n";
      throw Exit{kExitUsage};
    }
    out.push_back(s - 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arity gap analysis of finite functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ag_version()));

  Io io;
  auto add_io = [&io](CLI::App* cmd) {
    cmd->add_option("--in", io.in, "Input file (default stdin)");
    cmd->add_option("--out", io.out, "Output file (default stdout)");
  };

  auto* analyze = app.add_subcommand("analyze", "Essential arity, quasi-arity and arity gap");
  add_io(analyze);

  auto* classify = app.add_subcommand("classify", "Arity gap classification");
  add_io(classify);
  auto* boolean_flag = classify->add_flag("--boolean", "Boolean classifier (k = b = 2)");
  auto* pseudo_flag =
      classify->add_flag("--pseudo-boolean", "Pseudo-Boolean classifier (k = 2)");
  boolean_flag->excludes(pseudo_flag);

  auto* minor = app.add_subcommand("minor", "Variable identification minors");
  add_io(minor);
  std::vector<size_t> identify, sigma;
  std::uint32_t target_arity = 0;
  auto* identify_opt = minor->add_option("--identify", identify, "Identify slot i with j")
                           ->delimiter(',')
                           ->expected(2);
  auto* sigma_opt =
      minor->add_option("--sigma", sigma, "Slot map a,b,c,... into 1..n")->delimiter(',');
  auto* target_opt = minor->add_option("--target-arity", target_arity, "n for --sigma");
  auto* diagonal_opt = minor->add_flag("--diagonal", "Unary diagonal a -> f(a,...,a)");
  sigma_opt->needs(target_opt);
  target_opt->needs(sigma_opt);
  identify_opt->excludes(sigma_opt)->excludes(diagonal_opt);
  sigma_opt->excludes(diagonal_opt);

  auto* oddsupp = app.add_subcommand("oddsupp-check", "Determination by oddsupp");
  add_io(oddsupp);
  bool restricted = false;
  oddsupp->add_flag("--restricted", restricted, "Check the restriction to the diagonal set");

  auto* gen = app.add_subcommand("gen", "Constructed functions");
  gen->require_subcommand(1);
  std::string gen_out;
  std::uint32_t gk = 0, gn = 0, gb = 0, gm = 0;
  std::uint64_t gseed = 0;
  auto* salomaa = gen->add_subcommand("salomaa", "Value 1 at (0,...,k-1), 0 elsewhere");
  salomaa->add_option("--k", gk)->required();
  salomaa->add_option("--out", gen_out);
  auto* quasi = gen->add_subcommand("quasi", "Depends on all slots, quasi-arity m");
  quasi->add_option("--k", gk)->required();
  quasi->add_option("--n", gn)->required();
  quasi->add_option("--b", gb)->required();
  quasi->add_option("--m", gm)->required();
  quasi->add_option("--seed", gseed);
  quasi->add_option("--out", gen_out);
  auto* gen_oddsupp = gen->add_subcommand("oddsupp", "Restriction determined by oddsupp");
  gen_oddsupp->add_option("--k", gk)->required();
  gen_oddsupp->add_option("--n", gn)->required();
  gen_oddsupp->add_option("--b", gb)->required();
  gen_oddsupp->add_option("--seed", gseed);
  gen_oddsupp->add_option("--out", gen_out);

  auto* enumerate = app.add_subcommand("enumerate", "Every function of a shape, filtered");
  std::uint32_t ek = 0, en = 0, eb = 0;
  std::vector<std::string> filters;
  unsigned ejobs = 1;
  std::string enum_out;
  enumerate->add_option("--k", ek)->required();
  enumerate->add_option("--n", en)->required();
  enumerate->add_option("--b", eb)->required();
  enumerate->add_option("--filter", filters, "gap=G, qa=M, ess=E or full (repeatable)")
      ->take_all();
  enumerate->add_option("--jobs", ejobs)->check(CLI::PositiveNumber);
  enumerate->add_option("--out", enum_out);

  auto* verify = app.add_subcommand("verify", "Check a theorem over a function space");
  ag_verify_options vopts;
  ag_verify_options_init(&vopts);
  std::string theorem, verify_out;
  bool exhaustive = false;
  verify->add_option("--theorem", theorem)->required();
  verify->add_option("--k", vopts.k)->required();
  verify->add_option("--n", vopts.n)->required();
  verify->add_option("--b", vopts.b)->required();
  auto* exhaustive_opt = verify->add_flag("--exhaustive", exhaustive);
  auto* samples_opt = verify->add_option("--samples", vopts.samples);
  auto* seed_opt = verify->add_option("--seed", vopts.seed);
  auto* witnesses_opt =
      verify->add_option("--witnesses", vopts.witnesses, "Constructed witnesses per generator");
  exhaustive_opt->excludes(samples_opt)->excludes(seed_opt)->excludes(witnesses_opt);
  verify->add_option("--jobs", vopts.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--out", verify_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      return for_each_function(io, [](const ag_function* f, std::string& line) {
        char* text = nullptr;
        const ag_status s = ag_analyze(f, &text);
        line = take(text);
        return s;
      });
    }
    if (classify->parsed()) {
      const ag_classify_mode mode = *boolean_flag  ? AG_CLASSIFY_BOOLEAN
                                    : *pseudo_flag ? AG_CLASSIFY_PSEUDO_BOOLEAN
                                                   : AG_CLASSIFY_GENERAL;
      return for_each_function(io, [mode](const ag_function* f, std::string& line) {
        char* text = nullptr;
        const ag_status s = ag_classify(f, mode, nullptr, &text);
        line = take(text);
        return s;
      });
    }
    if (minor->parsed()) {
      if (!*identify_opt && !*sigma_opt && !*diagonal_opt) {
        std::cerr << "aritygap: minor needs --identify, --sigma or --diagonal\n";
        return kExitUsage;
      }
      const auto pair = to_zero_based(identify, "--identify");
      const auto map = to_zero_based(sigma, "--sigma");
      return for_each_function(io, [&](const ag_function* f, std::string& line) {
        ag_function* raw = nullptr;
        ag_status s;
        if (*identify_opt) {
          s = ag_identification_minor(f, pair[0], pair[1], &raw);
        } else if (*sigma_opt) {
          s = ag_simple_minor(f, target_arity, map.data(), map.size(), &raw);
        } else {
          s = ag_diagonal(f, &raw);
        }
        if (s != AG_OK) return s;
        FunctionPtr g(raw);
        char* text = nullptr;
        s = ag_function_render(g.get(), 0, &text);
        line = take(text);
        return s;
      });
    }
    if (oddsupp->parsed()) {
      return for_each_function(io, [restricted](const ag_function* f, std::string& line) {
        char* text = nullptr;
        const ag_status s = ag_oddsupp_check(f, restricted ? 1 : 0, nullptr, &text);
        line = take(text);
        return s;
      });
    }
    if (gen->parsed()) {
      ag_function* raw = nullptr;
      if (salomaa->parsed()) {
        check(ag_gen_salomaa(gk, &raw));
      } else if (quasi->parsed()) {
        check(ag_gen_quasi(gk, gn, gb, gm, gseed, &raw));
      } else {
        check(ag_gen_oddsupp(gk, gn, gb, gseed, &raw));
      }
      FunctionPtr f(raw);
      Output output(gen_out);
      write_function(output.stream(), f.get());
      return kExitOk;
    }
    if (enumerate->parsed()) {
      std::vector<const char*> cfilters;
      for (const auto& s : filters) cfilters.push_back(s.c_str());
      ag_enumerator* raw = nullptr;
      check(ag_enumerator_create(ek, en, eb, cfilters.data(), cfilters.size(), ejobs, &raw));
      std::unique_ptr<ag_enumerator, void (*)(ag_enumerator*)> e(raw, ag_enumerator_free);
      Output output(enum_out);
      while (true) {
        ag_function* next = nullptr;
        check(ag_enumerator_next(e.get(), &next));
        if (!next) break;
        FunctionPtr f(next);
        write_function(output.stream(), f.get());
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      vopts.theorem = theorem.c_str();
      vopts.exhaustive = exhaustive ? 1 : 0;
      ag_report* raw = nullptr;
      check(ag_verify(&vopts, &raw));
      std::unique_ptr<ag_report, void (*)(ag_report*)> report(raw, ag_report_free);
      char* text = nullptr;
      check(ag_report_render(report.get(), &text));
      Output output(verify_out);
      output.stream() << take(text) << '\n';
      return ag_report_failures(report.get()) > 0 ? kExitFailures : kExitOk;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
