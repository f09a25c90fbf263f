#include "aritygap/core.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <limits>
#include <sstream>

namespace aritygap {

namespace {

std::atomic<std::uint64_t> g_max_table_entries{100'000'000};

std::string errc_message(Errc code, const std::string& what) {
  return std::string(to_string(code)) + ": " + what;
}

}  // namespace

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parse: return "parse-error";
    case Errc::unsupported_arity: return "unsupported-arity";
    case Errc::unsupported_codomain: return "unsupported-codomain";
    case Errc::unsupported_domain: return "unsupported-domain";
    case Errc::gap_undefined: return "gap-undefined";
    case Errc::no_such_support: return "no-such-support";
    case Errc::oracle_infeasible: return "oracle-infeasible";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(errc_message(code, what)), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(Errc::parse, "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::uint64_t max_table_entries() noexcept { return g_max_table_entries.load(); }

void set_max_table_entries(std::uint64_t limit) noexcept {
  g_max_table_entries.store(limit);
}

// ---------------------------------------------------------------------------
// TupleCodec

TupleCodec::TupleCodec(std::uint32_t k, std::uint32_t n) : k_(k), n_(n) {
  if (k < 2) throw Error(Errc::invalid_argument, "domain size k must be >= 2");
  if (n < 1) throw Error(Errc::invalid_argument, "arity n must be >= 1");
  const std::uint64_t limit = max_table_entries();
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (size > limit / k) {
      throw Error(Errc::invalid_argument,
                  "table size k^n exceeds limit of " + std::to_string(limit));
    }
    size *= k;
  }
  size_ = static_cast<std::size_t>(size);
  strides_.resize(n);
  std::size_t stride = 1;
  for (std::size_t i = n; i-- > 0;) {
    strides_[i] = stride;
    stride *= k;
  }
}

std::size_t TupleCodec::encode(std::span<const Value> tuple) const {
  if (tuple.size() != n_) {
    throw Error(Errc::invalid_argument,
                "tuple has length " + std::to_string(tuple.size()) +
                    ", expected " + std::to_string(n_));
  }
  std::size_t index = 0;
  for (const Value a : tuple) {
    if (a >= k_) {
      throw Error(Errc::invalid_argument,
                  "coordinate " + std::to_string(a) + " out of range for k=" +
                      std::to_string(k_));
    }
    index = index * k_ + a;
  }
  return index;
}

Tuple TupleCodec::decode(std::size_t index) const {
  Tuple t(n_);
  decode_into(index, t);
  return t;
}

void TupleCodec::decode_into(std::size_t index, std::span<Value> out) const {
  for (std::size_t i = n_; i-- > 0;) {
    out[i] = static_cast<Value>(index % k_);
    index /= k_;
  }
}

bool next_tuple(std::span<Value> tuple, std::uint32_t k) noexcept {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < k) return true;
    tuple[i] = 0;
  }
  return false;
}

bool has_repeated_coordinate(std::span<const Value> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// FiniteFunction

FiniteFunction::FiniteFunction(std::uint32_t k, std::uint32_t n,
                               std::uint32_t b, std::vector<Value> table)
    : codec_(k, n), b_(b), table_(std::move(table)) {
  if (b < 2) throw Error(Errc::invalid_argument, "codomain size b must be >= 2");
  if (table_.size() != codec_.size()) {
    throw Error(Errc::invalid_argument,
                "table has " + std::to_string(table_.size()) +
                    " entries, expected " + std::to_string(codec_.size()));
  }
  for (const Value v : table_) {
    if (v >= b) {
      throw Error(Errc::invalid_argument,
                  "table value " + std::to_string(v) + " out of range for b=" +
                      std::to_string(b));
    }
  }
}

FiniteFunction FiniteFunction::constant(std::uint32_t k, std::uint32_t n,
                                        std::uint32_t b, Value c) {
  TupleCodec codec(k, n);
  return FiniteFunction(k, n, b, std::vector<Value>(codec.size(), c));
}

FiniteFunction FiniteFunction::projection(std::uint32_t k, std::uint32_t n,
                                          std::size_t slot) {
  if (slot >= n) throw Error(Errc::invalid_argument, "projection slot out of range");
  return tabulate(k, n, k, [slot](std::span<const Value> t) { return t[slot]; });
}

Value FiniteFunction::eval(std::span<const Value> tuple) const {
  return table_[codec_.encode(tuple)];
}

bool FiniteFunction::is_constant() const noexcept {
  return std::all_of(table_.begin(), table_.end(),
                     [this](Value v) { return v == table_.front(); });
}

std::size_t FiniteFunction::range_size() const {
  std::vector<bool> seen(b_, false);
  std::size_t count = 0;
  for (const Value v : table_) {
    if (!seen[v]) {
      seen[v] = true;
      ++count;
    }
  }
  return count;
}

bool operator<(const FiniteFunction& lhs, const FiniteFunction& rhs) {
  if (lhs.k() != rhs.k()) return lhs.k() < rhs.k();
  if (lhs.n() != rhs.n()) return lhs.n() < rhs.n();
  if (lhs.b() != rhs.b()) return lhs.b() < rhs.b();
  return std::lexicographical_compare(lhs.table_.begin(), lhs.table_.end(),
                                      rhs.table_.begin(), rhs.table_.end());
}

// ---------------------------------------------------------------------------
// Text format

namespace {

void render_header(std::ostringstream& out, const FiniteFunction& f) {
  out << f.k() << ' ' << f.n() << ' ' << f.b();
}

void render_values(std::ostringstream& out, const FiniteFunction& f) {
  bool first = true;
  for (const Value v : f.table()) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
}

}  // namespace

std::string render(const FiniteFunction& f) {
  std::ostringstream out;
  render_header(out, f);
  out << '\n';
  render_values(out, f);
  return out.str();
}

std::string render_single_line(const FiniteFunction& f) {
  std::ostringstream out;
  render_header(out, f);
  out << ';';
  render_values(out, f);
  return out.str();
}

std::string render_tuple(std::span<const Value> tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(tuple[i]);
  }
  return s + ")";
}

FunctionReader::FunctionReader(std::string text) : text_(std::move(text)) {}

std::optional<FunctionReader::Token> FunctionReader::peek_token() {
  if (lookahead_) return lookahead_;
  while (pos_ < text_.size()) {
    const char c = text_[pos_];
    if (c == '\n') {
      ++pos_;
      ++line_;
      line_start_ = pos_;
      at_line_start_ = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == ';') {
      ++pos_;
      continue;
    }
    if (c == '#' && at_line_start_) {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      continue;
    }
    at_line_start_ = false;
    const std::size_t begin = pos_;
    while (pos_ < text_.size()) {
      const char d = text_[pos_];
      if (d == ' ' || d == '\t' || d == '\r' || d == '\n' || d == ';') break;
      ++pos_;
    }
    lookahead_ = Token{std::string_view(text_).substr(begin, pos_ - begin),
                       line_, begin - line_start_ + 1};
    return lookahead_;
  }
  return std::nullopt;
}

std::optional<FunctionReader::Token> FunctionReader::take_token() {
  auto token = peek_token();
  lookahead_.reset();
  return token;
}

namespace {

std::uint64_t parse_number(std::string_view text, std::size_t line,
                           std::size_t column, const char* what) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, column,
                     std::string("expected decimal ") + what + ", got '" +
                         std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::optional<FiniteFunction> FunctionReader::next() {
  auto first = take_token();
  if (!first) return std::nullopt;

  std::uint64_t header[3];
  header[0] = parse_number(first->text, first->line, first->column, "header field k");
  for (int i = 1; i < 3; ++i) {
    auto tok = peek_token();
    if (!tok || tok->line != first->line) {
      const std::size_t col = tok && tok->line == first->line ? tok->column
                                                              : first->column;
      throw ParseError(first->line, col,
                       "malformed header: expected 'k n b' on one line");
    }
    take_token();
    header[i] = parse_number(tok->text, tok->line, tok->column,
                             i == 1 ? "header field n" : "header field b");
  }
  const auto k = header[0], n = header[1], b = header[2];
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  if (k < 2 || n < 1 || b < 2 || k > kMax || n > kMax || b > kMax) {
    throw ParseError(first->line, first->column,
                     "malformed header: need k >= 2, n >= 1, b >= 2");
  }
  std::size_t count = 0;
  try {
    count = TupleCodec(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n))
                .size();
  } catch (const Error& e) {
    throw ParseError(first->line, first->column,
                     std::string("malformed header: ") + e.what());
  }

  std::vector<Value> table;
  table.reserve(count);
  std::size_t last_line = first->line;
  std::size_t last_column = first->column;
  while (table.size() < count) {
    auto tok = take_token();
    if (!tok) {
      throw ParseError(last_line, last_column,
                       "expected " + std::to_string(count) + " values, got " +
                           std::to_string(table.size()));
    }
    const auto v = parse_number(tok->text, tok->line, tok->column, "value");
    if (v >= b) {
      throw ParseError(tok->line, tok->column,
                       "value " + std::to_string(v) + " out of range for b=" +
                           std::to_string(b));
    }
    table.push_back(static_cast<Value>(v));
    last_line = tok->line;
    last_column = tok->column;
  }
  return FiniteFunction(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n),
                        static_cast<std::uint32_t>(b), std::move(table));
}

FiniteFunction parse_function(std::string_view text) {
  FunctionReader reader{std::string(text)};
  auto f = reader.next();
  if (!f) throw ParseError(1, 1, "malformed header: empty input");
  // Trailing tokens mean the value count was wrong.
  if (auto extra = reader.peek_token()) {
    throw ParseError(extra->line, extra->column,
                     "expected " + std::to_string(f->size()) +
                         " values, found extra token '" +
                         std::string(extra->text) + "'");
  }
  return *f;
}

}  // namespace aritygap
