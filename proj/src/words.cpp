#include "blocklie/words.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blocklie {

int Word::depth() const {
    int d = 0;
    for (uint8_t c : letters) d += (c == 1);
    return d;
}

int BlockTuple::weight() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0) - 2;
}

int ZetaIndex::weight() const {
    return leading + std::accumulate(entries.begin(), entries.end(), 0);
}

bool ZetaIndex::totally_odd() const {
    if (leading != 0) return false;
    for (int k : entries)
        if (k % 2 == 0) return false;
    return !entries.empty();
}

namespace {

std::vector<uint8_t> extend(const Word& w) {
    std::vector<uint8_t> e;
    e.reserve(w.letters.size() + 2);
    e.push_back(0);
    e.insert(e.end(), w.letters.begin(), w.letters.end());
    e.push_back(1);
    return e;
}

} // namespace

BlockTuple block_decompose(const Word& w) {
    const auto e = extend(w);
    BlockTuple b;
    int run = 1;
    for (size_t i = 1; i < e.size(); ++i) {
        if (e[i] == e[i - 1]) {
            b.lengths.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    b.lengths.push_back(run);
    return b;
}

int block_degree(const Word& w) {
    const auto e = extend(w);
    int deg = 0;
    for (size_t i = 1; i < e.size(); ++i) deg += (e[i] == e[i - 1]);
    return deg;
}

bool is_valid_block_tuple(const BlockTuple& b) {
    if (b.lengths.empty()) return false;
    int total = 0;
    // Each block alternates; the next block starts with the letter the
    // previous one ended on. Starting letter of the whole word is 0 and
    // the reconstruction must end in 1.
    int start = 0;
    int last = 0;
    for (int len : b.lengths) {
        if (len < 1) return false;
        total += len;
        last = (len % 2 == 1) ? start : 1 - start;
        start = last;
    }
    return total >= 2 && last == 1;
}

Word blocks_to_word(const BlockTuple& b) {
    if (!is_valid_block_tuple(b)) throw std::invalid_argument("block tuple does not encode an I(0;w;1) symbol: " + to_text(b));
    std::vector<uint8_t> e;
    int start = 0;
    for (int len : b.lengths) {
        int c = start;
        for (int i = 0; i < len; ++i) {
            e.push_back(static_cast<uint8_t>(c));
            c = 1 - c;
        }
        start = e.back();
    }
    Word w;
    w.letters.assign(e.begin() + 1, e.end() - 1);
    return w;
}

std::pair<Word, int> zeta_to_word(const ZetaIndex& z) {
    if (z.leading < 0) throw std::invalid_argument("negative leading subscript");
    Word w;
    w.letters.assign(z.leading, 0);
    for (int k : z.entries) {
        if (k < 1) throw std::invalid_argument("zeta entries must be positive");
        w.letters.push_back(1);
        w.letters.insert(w.letters.end(), k - 1, 0);
    }
    int sign = (z.depth() % 2 == 0) ? 1 : -1;
    return {w, sign};
}

std::pair<ZetaIndex, int> word_to_zeta(const Word& w) {
    if (w.letters.empty()) throw std::invalid_argument("empty word has no zeta index");
    ZetaIndex z;
    size_t i = 0;
    while (i < w.letters.size() && w.letters[i] == 0) ++i;
    z.leading = static_cast<int>(i);
    while (i < w.letters.size()) {
        // w.letters[i] == 1 starts an entry
        size_t j = i + 1;
        while (j < w.letters.size() && w.letters[j] == 0) ++j;
        z.entries.push_back(static_cast<int>(j - i));
        i = j;
    }
    int sign = (z.depth() % 2 == 0) ? 1 : -1;
    return {z, sign};
}

std::string to_text(const Word& w) {
    std::string s = "w:";
    for (uint8_t c : w.letters) s += static_cast<char>('0' + c);
    return s;
}

std::string to_text(const BlockTuple& b) {
    std::ostringstream os;
    os << "b:{";
    for (size_t i = 0; i < b.lengths.size(); ++i) os << (i ? "," : "") << b.lengths[i];
    os << "}";
    return os.str();
}

std::string to_text(const ZetaIndex& z) {
    std::ostringstream os;
    os << "z:{";
    if (z.leading != 0) os << "l=" << z.leading << ";";
    for (size_t i = 0; i < z.entries.size(); ++i) os << (i ? "," : "") << z.entries[i];
    os << "}";
    return os.str();
}

namespace {

[[noreturn]] void bad_syntax(const std::string& s, const char* what) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": \"" + s + "\"");
}

std::vector<int> parse_int_list(const std::string& body, const std::string& orig, const char* what) {
    std::vector<int> out;
    if (body.empty()) return out;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) bad_syntax(orig, what);
            out.push_back(v);
        } catch (const std::invalid_argument&) {
            bad_syntax(orig, what);
        } catch (const std::out_of_range&) {
            bad_syntax(orig, what);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

Word parse_word(const std::string& s) {
    if (s.rfind("w:", 0) != 0) bad_syntax(s, "word");
    Word w;
    for (size_t i = 2; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') bad_syntax(s, "word");
        w.letters.push_back(static_cast<uint8_t>(s[i] - '0'));
    }
    return w;
}

BlockTuple parse_block_tuple(const std::string& s) {
    if (s.rfind("b:{", 0) != 0 || s.back() != '}') bad_syntax(s, "block tuple");
    BlockTuple b;
    b.lengths = parse_int_list(s.substr(3, s.size() - 4), s, "block tuple");
    if (b.lengths.empty()) bad_syntax(s, "block tuple");
    return b;
}

ZetaIndex parse_zeta(const std::string& s) {
    if (s.rfind("z:{", 0) != 0 || s.back() != '}') bad_syntax(s, "zeta index");
    std::string body = s.substr(3, s.size() - 4);
    ZetaIndex z;
    if (body.rfind("l=", 0) == 0) {
        size_t semi = body.find(';');
        if (semi == std::string::npos) bad_syntax(s, "zeta index");
        try {
            size_t used = 0;
            z.leading = std::stoi(body.substr(2, semi - 2), &used);
            if (used != semi - 2) bad_syntax(s, "zeta index");
        } catch (const std::exception&) {
            bad_syntax(s, "zeta index");
        }
        if (z.leading < 0) bad_syntax(s, "zeta index");
        body = body.substr(semi + 1);
    }
    z.entries = parse_int_list(body, s, "zeta index");
    return z;
}

} // namespace blocklie
