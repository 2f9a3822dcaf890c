#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phif {

// A finite word of +/-1 signs under one of two conventions:
//
//  * primitive_address: the word s_1 ... s_{n-1} addressing a primitive zero
//    y(s) = s_1 sqrt(1 + s_2 sqrt(1 + ... + s_{n-1} sqrt 2)) of P_n,
//    outermost sign first.
//
//  * sigma_prefix: the finite prefix sigma_1 ... sigma_L of an infinite
//    sign sequence that ends in +1s, innermost sign first. Canonical form
//    stores the prefix up to the last -1 (so it never ends in +1 unless
//    empty), which makes equality and enumeration by prefix length
//    well-defined.
//
// The two conventions describe the same data read from opposite ends:
// sigma_k = s_{n-k}.
enum class SeqKind { primitive_address, sigma_prefix };

struct SignSeq {
  SeqKind kind = SeqKind::sigma_prefix;
  std::vector<std::int8_t> word;

  static SignSeq sigma(std::vector<std::int8_t> w) {
    SignSeq s{SeqKind::sigma_prefix, std::move(w)};
    s.validate();
    s.canonicalize();
    return s;
  }
  static SignSeq address(std::vector<std::int8_t> w) {
    SignSeq s{SeqKind::primitive_address, std::move(w)};
    s.validate();
    return s;
  }

  void validate() const {
    for (auto v : word)
      if (v != 1 && v != -1)
        throw std::invalid_argument("SignSeq: entries must be +1 or -1");
  }

  // Strips the implicit +1 tail (sigma convention only).
  void canonicalize() {
    if (kind != SeqKind::sigma_prefix) return;
    while (!word.empty() && word.back() == 1) word.pop_back();
  }

  bool canonical() const {
    return kind != SeqKind::sigma_prefix || word.empty() || word.back() == -1;
  }

  // sigma_1 ... sigma_{n-1} reversed into the address s_1 ... s_{n-1} of the
  // primitive zero of P_n reached after n scaling steps; the sigma prefix is
  // padded with +1 up to length n-1.
  SignSeq to_address(int n) const {
    if (kind != SeqKind::sigma_prefix)
      throw std::logic_error("SignSeq: to_address expects sigma convention");
    if (n < 2 || (int)word.size() > n - 1)
      throw std::invalid_argument("SignSeq: address order too small");
    std::vector<std::int8_t> s(n - 1, 1);
    for (std::size_t k = 0; k < word.size(); ++k)
      s[n - 2 - k] = word[k];  // s_{n-k-1} slot for sigma_{k+1}
    return SignSeq{SeqKind::primitive_address, std::move(s)};
  }

  // Inverse of to_address: reverse and drop the +1 tail.
  SignSeq to_sigma() const {
    if (kind != SeqKind::primitive_address)
      throw std::logic_error("SignSeq: to_sigma expects address convention");
    std::vector<std::int8_t> s(word.rbegin(), word.rend());
    SignSeq out{SeqKind::sigma_prefix, std::move(s)};
    out.canonicalize();
    return out;
  }

  std::string to_string() const {
    std::string out;
    out.reserve(word.size());
    for (auto v : word) out.push_back(v == 1 ? '+' : '-');
    return out;
  }

  static SignSeq parse_sigma(const std::string& text) {
    std::vector<std::int8_t> w;
    w.reserve(text.size());
    for (char c : text) {
      if (c == '+')
        w.push_back(1);
      else if (c == '-')
        w.push_back(-1);
      else
        throw std::invalid_argument("SignSeq: expected only '+'/'-'");
    }
    return sigma(std::move(w));
  }

  friend bool operator==(const SignSeq& a, const SignSeq& b) {
    return a.kind == b.kind && a.word == b.word;
  }
};

}  // namespace phif
