#pragma once

// Dense tables of finite functions f: A^n -> B, the tuple codec, and the
// plain-text interchange format.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aritygap {

/// Elements of A and B are identified with 0..k-1 and 0..b-1.
using Value = std::uint32_t;
using Tuple = std::vector<Value>;

enum class Errc {
  invalid_argument,
  parse,
  unsupported_arity,
  unsupported_codomain,
  unsupported_domain,
  gap_undefined,
  no_such_support,
  oracle_infeasible,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Upper bound on k^n for any table; default 10^8 entries.
std::uint64_t max_table_entries() noexcept;
void set_max_table_entries(std::uint64_t limit) noexcept;

/// Big-endian mixed radix: index = sum a_i * k^(n-1-i), slot 0 most significant.
class TupleCodec {
 public:
  TupleCodec(std::uint32_t k, std::uint32_t n);

  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }

  std::size_t encode(std::span<const Value> tuple) const;
  Tuple decode(std::size_t index) const;
  void decode_into(std::size_t index, std::span<Value> out) const;

  std::size_t stride(std::size_t slot) const { return strides_[slot]; }
  Value digit(std::size_t index, std::size_t slot) const {
    return static_cast<Value>((index / strides_[slot]) % k_);
  }

  friend bool operator==(const TupleCodec&, const TupleCodec&) = default;

 private:
  std::uint32_t k_;
  std::uint32_t n_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
};

/// Steps `tuple` to its successor in index order. Returns false (and wraps to
/// all zeros) after the last tuple.
bool next_tuple(std::span<Value> tuple, std::uint32_t k) noexcept;

bool has_repeated_coordinate(std::span<const Value> tuple);

class FiniteFunction {
 public:
  FiniteFunction(std::uint32_t k, std::uint32_t n, std::uint32_t b,
                 std::vector<Value> table);

  /// Builds the table by calling fn(tuple) for every tuple in index order.
  template <class Fn>
  static FiniteFunction tabulate(std::uint32_t k, std::uint32_t n,
                                 std::uint32_t b, Fn&& fn) {
    TupleCodec codec(k, n);
    std::vector<Value> table;
    table.reserve(codec.size());
    Tuple t(n, 0);
    do {
      table.push_back(static_cast<Value>(fn(std::span<const Value>(t))));
    } while (next_tuple(t, k));
    return FiniteFunction(k, n, b, std::move(table));
  }

  static FiniteFunction constant(std::uint32_t k, std::uint32_t n,
                                 std::uint32_t b, Value c);
  /// The n-ary projection onto `slot`, as an operation on A (b = k).
  static FiniteFunction projection(std::uint32_t k, std::uint32_t n,
                                   std::size_t slot);

  std::uint32_t k() const noexcept { return codec_.k(); }
  std::uint32_t n() const noexcept { return codec_.n(); }
  std::uint32_t b() const noexcept { return b_; }
  std::size_t size() const noexcept { return table_.size(); }
  const TupleCodec& codec() const noexcept { return codec_; }
  std::span<const Value> table() const noexcept { return table_; }

  Value operator[](std::size_t index) const { return table_[index]; }
  Value eval(std::span<const Value> tuple) const;

  bool is_constant() const noexcept;
  /// Number of distinct values taken.
  std::size_t range_size() const;

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;
  /// Orders functions by (k, n, b) and then lexicographically by table.
  friend bool operator<(const FiniteFunction& lhs, const FiniteFunction& rhs);

 private:
  TupleCodec codec_;
  std::uint32_t b_;
  std::vector<Value> table_;
};

// Text format: a header line `k n b`, then k^n values in index order.
// Lines starting with '#' are comments. A `;` may replace the line break
// after the header (single-line variant).

FiniteFunction parse_function(std::string_view text);
std::string render(const FiniteFunction& f);
std::string render_single_line(const FiniteFunction& f);
std::string render_tuple(std::span<const Value> tuple);

/// Reads consecutive functions from a text stream.
class FunctionReader {
 public:
  explicit FunctionReader(std::string text);

  /// Next function, or nullopt at end of input. Throws ParseError.
  std::optional<FiniteFunction> next();

 private:
  friend FiniteFunction parse_function(std::string_view text);

  struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
  };
  std::optional<Token> peek_token();
  std::optional<Token> take_token();

  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  bool at_line_start_ = true;
  std::optional<Token> lookahead_;
};

}  // namespace aritygap
