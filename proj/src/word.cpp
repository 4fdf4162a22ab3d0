#include "freefield/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace freefield {

bool is_reduced_word(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] == w[i].inverse()) return false;
    return true;
}

int compare_lenlex(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].code() != b[i].code()) return a[i].code() < b[i].code() ? -1 : 1;
    }
    return 0;
}

GroupElement GroupElement::reduce(const Word& w) {
    Word stack;
    stack.reserve(w.size());
    for (const Letter& l : w) {
        if (!stack.empty() && stack.back() == l.inverse())
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return GroupElement(std::move(stack));
}

GroupElement GroupElement::from_reduced(Word w) {
    if (!is_reduced_word(w)) throw DomainError("word is not reduced");
    return GroupElement(std::move(w));
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
    Word cat = a.word();
    cat.insert(cat.end(), b.word().begin(), b.word().end());
    return GroupElement::reduce(cat);
}

GroupElement group_inv(const GroupElement& a) {
    Word w(a.word().rbegin(), a.word().rend());
    for (Letter& l : w) l = l.inverse();
    return GroupElement::from_reduced(std::move(w));
}

std::pair<GroupElement, std::vector<GroupElement>> prefix_suffixes(const GroupElement& omega) {
    if (omega.is_identity())
        throw DomainError("prefix and suffixes are undefined for the identity");
    const Word& w = omega.word();
    Word prefix(w.begin(), w.end() - 1);
    std::vector<GroupElement> suffixes;
    suffixes.reserve(w.size());
    for (std::size_t len = 1; len <= w.size(); ++len)
        suffixes.push_back(GroupElement::from_reduced(Word(w.end() - len, w.end())));
    return {GroupElement::from_reduced(std::move(prefix)), std::move(suffixes)};
}

bool is_reduced_factorization(const GroupElement& omega, const std::vector<GroupElement>& parts) {
    std::size_t total = 0;
    GroupElement prod;
    for (const GroupElement& p : parts) {
        total += p.length();
        prod = group_mul(prod, p);
    }
    return total == omega.length() && prod == omega;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw DomainError("alphabet must be non-empty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw DomainError("empty generator name");
        if (!seen.insert(n).second) throw DomainError("duplicate generator name: " + n);
    }
}

Alphabet Alphabet::from_csv(const std::string& csv) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    names.push_back(cur);
    return Alphabet(std::move(names));
}

std::size_t Alphabet::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return names_.size();
}

std::string Alphabet::letter_to_string(const Letter& l) const {
    std::string s = name(l.index);
    if (l.barred) s += "'";
    return s;
}

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

Word Alphabet::parse_word(const std::string& text) const {
    Word out;
    std::size_t i = 0;
    auto parse_run = [&](std::size_t start, const std::string& run) {
        // Greedy longest-match segmentation of a juxtaposed run of names.
        std::size_t pos = 0;
        while (pos < run.size()) {
            std::size_t best = 0;
            std::size_t best_idx = names_.size();
            for (std::size_t g = 0; g < names_.size(); ++g) {
                const std::string& n = names_[g];
                if (n.size() > best && run.compare(pos, n.size(), n) == 0) {
                    best = n.size();
                    best_idx = g;
                }
            }
            if (best_idx == names_.size())
                throw ParseError("unknown generator name in word: " + run.substr(pos), start + pos);
            pos += best;
            bool barred = false;
            // The inverse markers bind to the single preceding letter.
            if (pos < run.size() && run[pos] == '\'') {
                barred = true;
                ++pos;
            }
            out.push_back(Letter(static_cast<std::uint32_t>(best_idx), barred));
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (is_name_char(c)) {
            std::size_t start = i;
            std::string run;
            while (i < text.size() && (is_name_char(text[i]) || text[i] == '\'')) run += text[i++];
            // x^-1 spelled with caret: handled below, so split the run there.
            parse_run(start, run);
        } else if (c == '^') {
            if (text.compare(i, 3, "^-1") == 0) {
                if (out.empty()) throw ParseError("^-1 with no preceding letter", i);
                out.back() = out.back().inverse();
                i += 3;
            } else {
                throw ParseError("unexpected '^' in word", i);
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in word", i);
        }
    }
    return out;
}

std::string Alphabet::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += letter_to_string(w[i]);
    }
    return s;
}

void for_each_reduced_word(std::size_t n_generators, std::size_t max_len,
                           const std::function<bool(const Word&)>& fn) {
    Word w;
    std::function<void()> rec = [&]() {
        if (!fn(w)) return;
        if (w.size() == max_len) return;
        for (std::uint32_t code = 0; code < 2 * n_generators; ++code) {
            Letter l = Letter::from_code(code);
            if (!w.empty() && l == w.back().inverse()) continue;
            w.push_back(l);
            rec();
            w.pop_back();
        }
    };
    rec();
}

} // namespace freefield
