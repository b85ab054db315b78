#include "tgrw/algebra_packs.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "tgrw/errors.hpp"

namespace tgrw {

namespace {

std::vector<std::string> all_words(const std::vector<std::string>& symbols, std::size_t max_len) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& prefix : layer)
      for (const auto& s : symbols) next.push_back(prefix + s);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

AlphabetPtr commutative_alphabet(std::string name, CommutationAlphabet::Predicate is_letter,
                                 CommutationAlphabet::Enumerator enumerate, CommutationAlphabet::Order less = {}) {
  CommutationAlphabet::Config config;
  config.name = std::move(name);
  config.kind = CommutationKind::Total;
  config.is_letter = std::move(is_letter);
  config.less = std::move(less);
  config.enumerate_up_to = std::move(enumerate);
  return CommutationAlphabet::make(std::move(config));
}

std::map<std::string, std::int64_t> normal_form_of_letter(const RewriteSystem& system, const Letter& x) {
  CommutativeNormalizer normalizer(system);
  system.alphabet()->require_letter(x);
  std::map<std::string, std::int64_t> out;
  for (const auto& [letter, k] : normalizer.normal_form(x)) out[letter == kUnitLetter ? std::string{} : letter] += k;
  return out;
}

// Weyl letters: (number of leading c's, body over {a, b}).
std::pair<std::size_t, std::string_view> split_central(std::string_view letter) {
  std::size_t cs = 0;
  while (cs < letter.size() && letter[cs] == 'c') ++cs;
  return {cs, letter.substr(cs)};
}

bool is_weyl_letter(const Letter& x, bool central) {
  if (x == kUnitLetter) return true;
  if (x.empty()) return false;
  auto [cs, body] = central ? split_central(x) : std::pair<std::size_t, std::string_view>{0, x};
  return std::all_of(body.begin(), body.end(), [](char ch) { return ch == 'a' || ch == 'b'; });
}

std::int64_t trial_division_omega(std::int64_t n) {
  std::int64_t omega = 0;
  for (std::int64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++omega;
    }
  return omega + (n > 1 ? 1 : 0);
}

void multiplicative_partitions(std::int64_t n, std::int64_t min_factor, std::vector<std::int64_t>& prefix,
                               std::vector<std::vector<std::int64_t>>& out) {
  for (std::int64_t f = min_factor; f * f <= n; ++f) {
    if (n % f) continue;
    prefix.push_back(f);
    multiplicative_partitions(n / f, f, prefix, out);
    prefix.pop_back();
  }
  prefix.push_back(n);
  out.push_back(prefix);
  prefix.pop_back();
}

std::vector<std::vector<std::int64_t>> partitions_of(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> prefix;
  multiplicative_partitions(n, 2, prefix, out);
  return out;
}

IndexMultiset to_multiset(const std::vector<std::int64_t>& factors) {
  IndexMultiset m;
  for (auto f : factors) ++m[f];
  return m;
}

}  // namespace

std::vector<std::string> utf8_symbols(std::string_view token) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < token.size()) {
    const auto lead = static_cast<unsigned char>(token[i]);
    std::size_t len = 0;
    if (lead < 0x80) len = 1;
    else if ((lead >> 5) == 0x6) len = 2;
    else if ((lead >> 4) == 0xE) len = 3;
    else if ((lead >> 3) == 0x1E) len = 4;
    else throw InputError("invalid UTF-8 in '" + std::string(token) + "'");
    if (i + len > token.size()) throw InputError("truncated UTF-8 in '" + std::string(token) + "'");
    for (std::size_t k = 1; k < len; ++k)
      if ((static_cast<unsigned char>(token[i + k]) >> 6) != 0x2)
        throw InputError("invalid UTF-8 in '" + std::string(token) + "'");
    out.emplace_back(token.substr(i, len));
    i += len;
  }
  return out;
}

// -- Weyl -------------------------------------------------------------------

Letter weyl_letter(std::string_view word, bool central) {
  if (word.empty()) throw DomainError("the empty word is not a letter");
  std::string cs;
  std::string body;
  for (char ch : word) {
    if (ch == 'c' && central) cs.push_back(ch);
    else if (ch == 'a' || ch == 'b') body.push_back(ch);
    else
      throw InputError("'" + std::string(word) + "' is not a word over " + (central ? "{a,b,c}" : "{a,b}"));
  }
  return cs + body;
}

RewriteSystem weyl_system(bool central, Budgets budgets) {
  auto is_letter = [central](const Letter& x) { return is_weyl_letter(x, central); };
  auto enumerate = [central](std::size_t max_len) {
    std::vector<Letter> out;
    if (!central) {
      out = all_words({"a", "b"}, max_len);
    } else {
      for (std::size_t k = 0; k <= max_len; ++k) {
        const std::string cs(k, 'c');
        if (k > 0) out.push_back(cs);
        for (const auto& w : all_words({"a", "b"}, max_len - k)) out.push_back(cs + w);
      }
    }
    out.push_back(kUnitLetter);
    return out;
  };
  auto rules = [central](const Letter& x) {
    std::vector<Word> out;
    if (x == kUnitLetter) return out;
    auto [cs, body] = central ? split_central(x) : std::pair<std::size_t, std::string_view>{0, x};
    const std::string prefix(cs, 'c');
    for (std::size_t p = 0; p + 1 < body.size(); ++p) {
      if (body[p] != 'a' || body[p + 1] != 'b') continue;
      const std::string u(body.substr(0, p));
      const std::string v(body.substr(p + 2));
      Letter swapped = prefix + u + "ba" + v;
      Letter dropped = prefix + u + v;
      out.push_back({std::move(swapped), dropped.empty() ? kUnitLetter : std::move(dropped)});
    }
    return out;
  };
  return RewriteSystem(commutative_alphabet(central ? "weyl-central" : "weyl", is_letter, enumerate), rules, budgets);
}

WeightCertificate weyl_inversion_weights() {
  return {"inversions", [](const Letter& x) -> std::int64_t {
            if (x == kUnitLetter) return 1;
            std::int64_t as = 0;
            std::int64_t pairs = 0;
            for (char ch : x) {
              if (ch == 'a') ++as;
              else if (ch == 'b') pairs += as;
            }
            return 1 + pairs;
          }};
}

std::map<std::string, std::int64_t> weyl_normal_order(std::string_view word, bool central, Budgets budgets) {
  return normal_form_of_letter(weyl_system(central, budgets), weyl_letter(word, central));
}

// -- PBW --------------------------------------------------------------------

namespace {

std::shared_ptr<const std::unordered_map<std::string, std::size_t>> base_ranks(std::string_view ordered_base) {
  auto ranks = std::make_shared<std::unordered_map<std::string, std::size_t>>();
  const auto symbols = utf8_symbols(ordered_base);
  if (symbols.empty()) throw InputError("PBW base must be nonempty");
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (!ranks->emplace(symbols[i], i).second) throw InputError("PBW base repeats '" + symbols[i] + "'");
  return ranks;
}

}  // namespace

RewriteSystem pbw_system(std::string_view ordered_base, Budgets budgets) {
  auto ranks = base_ranks(ordered_base);
  auto symbols = utf8_symbols(ordered_base);
  auto is_letter = [ranks](const Letter& x) {
    if (x.empty()) return false;
    try {
      const auto s = utf8_symbols(x);
      return std::all_of(s.begin(), s.end(), [&](const std::string& g) { return ranks->count(g) != 0; });
    } catch (const InputError&) {
      return false;
    }
  };
  auto enumerate = [symbols](std::size_t max_len) { return all_words(symbols, max_len); };
  auto rules = [ranks](const Letter& x) {
    const auto s = utf8_symbols(x);
    std::vector<Word> out;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (ranks->at(s[i]) <= ranks->at(s[i + 1])) continue;
      std::string swapped;
      for (std::size_t k = 0; k < s.size(); ++k) swapped += s[k == i ? i + 1 : (k == i + 1 ? i : k)];
      out.push_back({std::move(swapped)});
    }
    return out;
  };
  return RewriteSystem(commutative_alphabet("pbw", is_letter, enumerate), rules, budgets);
}

WeightCertificate pbw_inversion_weights(std::string_view ordered_base) {
  auto ranks = base_ranks(ordered_base);
  return {"inversions", [ranks](const Letter& x) -> std::int64_t {
            const auto s = utf8_symbols(x);
            std::int64_t inversions = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
              for (std::size_t j = i + 1; j < s.size(); ++j)
                if (ranks->at(s[i]) > ranks->at(s[j])) ++inversions;
            return 1 + inversions;
          }};
}

std::map<std::string, std::int64_t> pbw_reorder(std::string_view word, std::string_view ordered_base,
                                                Budgets budgets) {
  return normal_form_of_letter(pbw_system(ordered_base, budgets), std::string(word));
}

// -- Prefabs ----------------------------------------------------------------

RewriteSystem prefab_system(const Prefab& prefab, Budgets budgets) {
  if (!prefab.is_element || !prefab.decompose) throw InputError("prefab '" + prefab.name + "' is incomplete");
  auto is_letter = [is_element = prefab.is_element, identity = prefab.identity](const Letter& x) {
    return x != identity && is_element(x);
  };
  return RewriteSystem(commutative_alphabet(prefab.name, is_letter, prefab.enumerate_up_to, prefab.less),
                       prefab.decompose, budgets);
}

std::set<std::string> shuffle_set(std::string_view w1, std::string_view w2) {
  const auto a = utf8_symbols(w1);
  const auto b = utf8_symbols(w2);
  std::set<std::string> out;
  std::string current;
  auto go = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == a.size() && j == b.size()) {
      out.insert(current);
      return;
    }
    const auto mark = current.size();
    if (i < a.size()) {
      current += a[i];
      self(self, i + 1, j);
      current.resize(mark);
    }
    if (j < b.size()) {
      current += b[j];
      self(self, i, j + 1);
      current.resize(mark);
    }
  };
  go(go, 0, 0);
  return out;
}

Prefab shuffle_prefab(std::string_view base) {
  auto base_symbols = utf8_symbols(base);
  auto allowed = std::make_shared<std::set<std::string>>(base_symbols.begin(), base_symbols.end());
  Prefab p;
  p.name = "shuffle";
  p.identity = "";
  p.is_element = [allowed](const Letter& x) {
    if (x.empty()) return false;
    try {
      const auto s = utf8_symbols(x);
      return allowed->empty() ||
             std::all_of(s.begin(), s.end(), [&](const std::string& g) { return allowed->count(g) != 0; });
    } catch (const InputError&) {
      return false;
    }
  };
  p.decompose = [](const Letter& w) {
    const auto s = utf8_symbols(w);
    const std::size_t n = s.size();
    if (n > 20) throw ResourceError("shuffle decompositions of words longer than 20 symbols are not enumerated");
    std::set<Word> pairs;
    // Masks containing position 0 cover each unordered split once.
    for (std::uint32_t mask = 1; mask + 1 < (1U << n); mask += 2) {
      std::string left, right;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? left : right) += s[i];
      Word pair{left, right};
      std::sort(pair.begin(), pair.end());
      pairs.insert(std::move(pair));
    }
    return std::vector<Word>(pairs.begin(), pairs.end());
  };
  p.compose = [](const Letter& y, const Letter& z) {
    std::set<Word> out;
    for (auto& w : shuffle_set(y, z)) out.insert(Word{w});
    return out;
  };
  p.enumerate_up_to = [base_symbols](std::size_t max_len) { return all_words(base_symbols, max_len); };
  return p;
}

WeightCertificate length_weights() {
  return {"length", [](const Letter& x) { return static_cast<std::int64_t>(utf8_symbols(x).size()); }};
}

std::map<std::string, std::int64_t> shuffle_prefab_invariant(std::string_view w, Budgets budgets) {
  return normal_form_of_letter(prefab_system(shuffle_prefab(), budgets), std::string(w));
}

Letter arith_letter(std::int64_t n) {
  if (n < 2) throw InputError("arithmetic prefab elements are x_n with n >= 2, got " + std::to_string(n));
  return "x" + std::to_string(n);
}

std::int64_t arith_index(const Letter& token) {
  std::int64_t n = 0;
  if (token.size() < 2 || token[0] != 'x' || token[1] == '0')
    throw InputError("'" + token + "' is not an arithmetic prefab element x<n>");
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), n);
  if (ec != std::errc{} || ptr != token.data() + token.size() || n < 2)
    throw InputError("'" + token + "' is not an arithmetic prefab element x<n> with n >= 2");
  return n;
}

std::set<IndexMultiset> arith_decompositions(std::int64_t n) {
  if (n < 2) throw InputError("decompositions need n >= 2, got " + std::to_string(n));
  std::set<IndexMultiset> out;
  for (const auto& factors : partitions_of(n)) out.insert(to_multiset(factors));
  return out;
}

std::set<IndexMultiset> arith_compose(std::int64_t m, std::int64_t n) {
  std::set<IndexMultiset> out;
  for (const auto& f : arith_decompositions(m))
    for (const auto& g : arith_decompositions(n)) {
      IndexMultiset sum = f;
      for (const auto& [i, k] : g) sum[i] += k;
      out.insert(std::move(sum));
    }
  return out;
}

Prefab arithmetic_prefab() {
  Prefab p;
  p.name = "arithmetic";
  p.identity = "x1";
  p.is_element = [](const Letter& x) {
    try {
      arith_index(x);
      return true;
    } catch (const InputError&) {
      return false;
    }
  };
  p.less = [](const Letter& x, const Letter& y) { return arith_index(x) < arith_index(y); };
  p.decompose = [](const Letter& x) {
    std::vector<Word> out;
    for (const auto& factors : partitions_of(arith_index(x))) {
      if (factors.size() < 2) continue;
      Word w;
      for (auto f : factors) w.push_back(arith_letter(f));
      out.push_back(std::move(w));
    }
    return out;
  };
  p.compose = [](const Letter& y, const Letter& z) {
    std::set<Word> out;
    for (const auto& m : arith_compose(arith_index(y), arith_index(z))) {
      Word w;
      for (const auto& [i, k] : m) w.insert(w.end(), static_cast<std::size_t>(k), arith_letter(i));
      out.insert(std::move(w));
    }
    return out;
  };
  p.enumerate_up_to = [](std::size_t max_n) {
    std::vector<Letter> out;
    for (std::int64_t n = 2; n <= static_cast<std::int64_t>(max_n); ++n) out.push_back(arith_letter(n));
    return out;
  };
  return p;
}

WeightCertificate omega_weights() {
  return {"omega", [](const Letter& x) { return 1 + trial_division_omega(arith_index(x)); }};
}

std::map<std::int64_t, std::int64_t> arith_invariant(std::int64_t m, Budgets budgets) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [letter, k] : normal_form_of_letter(prefab_system(arithmetic_prefab(), budgets), arith_letter(m)))
    out[arith_index(letter)] += k;
  return out;
}

}  // namespace tgrw
