#include "blocklie/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace blocklie {

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string ComponentCache::path_for(AlgebraKind algebra, int weight, int degree) const {
    std::ostringstream os;
    os << dir_ << "/" << algebra_name(algebra) << "_w" << weight << "_d" << degree << "_"
       << kSchemaVersion << ".csv";
    return os.str();
}

namespace {

std::string serialize(const GradedComponent& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.words.size(); ++i) {
        os << '"' << c.words[i].to_string() << '"';
        for (const auto& [col, v] : c.matrix.row(static_cast<int>(i)))
            os << "," << col << ":" << v.get_num().get_str() << "/" << v.get_den().get_str();
        os << "\n";
    }
    return os.str();
}

bool try_load(const std::string& path, AlgebraKind algebra, int weight, int degree,
              GradedComponent& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;

    std::ostringstream expected;
    expected << "# blocklie-component " << ComponentCache::kSchemaVersion << " "
             << algebra_name(algebra) << " " << weight << " " << degree << " checksum=";
    if (header.rfind(expected.str(), 0) != 0) return false;
    const std::string checksum_text = header.substr(expected.str().size());

    std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(payload)));
    if (checksum_text != buf) return false; // corrupt: recompute

    GradedComponent c;
    c.algebra = algebra;
    c.weight = weight;
    c.degree = degree;
    c.columns = monomials_of_degree(degree + 1, weight - degree);

    std::vector<std::string> lines;
    std::istringstream body(payload);
    std::string line;
    while (std::getline(body, line))
        if (!line.empty()) lines.push_back(line);

    c.matrix = QMatrix(static_cast<int>(lines.size()), static_cast<int>(c.columns.size()));
    try {
        for (size_t i = 0; i < lines.size(); ++i) {
            const std::string& line = lines[i];
            if (line.size() < 2 || line.front() != '"') return false;
            auto close = line.find('"', 1);
            if (close == std::string::npos) return false;
            c.words.push_back(parse_bracket_word(line.substr(1, close - 1)));
            Poly p(degree + 1);
            std::istringstream ls(line.substr(close + 1));
            std::string entry;
            while (std::getline(ls, entry, ',')) {
                if (entry.empty()) continue;
                auto colon = entry.find(':');
                auto slash = entry.find('/', colon);
                if (colon == std::string::npos || slash == std::string::npos) return false;
                int col = std::stoi(entry.substr(0, colon));
                if (col < 0 || col >= static_cast<int>(c.columns.size())) return false;
                Rat v = ratio(Int(entry.substr(colon + 1, slash - colon - 1)),
                              Int(entry.substr(slash + 1)));
                c.matrix.set(static_cast<int>(i), col, v);
                p.add_term(c.columns[col], v);
            }
            c.polys.push_back(std::move(p));
        }
    } catch (const std::exception&) {
        return false;
    }
    out = std::move(c);
    return true;
}

} // namespace

GradedComponent ComponentCache::get(AlgebraKind algebra, int weight, int degree) const {
    if (!enabled()) return graded_component(algebra, weight, degree);

    const std::string path = path_for(algebra, weight, degree);
    GradedComponent loaded;
    if (try_load(path, algebra, weight, degree, loaded)) return loaded;

    GradedComponent c = graded_component(algebra, weight, degree);
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);

    const std::string payload = serialize(c);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(payload)));
    std::ostringstream file;
    file << "# blocklie-component " << kSchemaVersion << " " << algebra_name(algebra) << " "
         << weight << " " << degree << " checksum=" << buf << "\n"
         << payload;

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << file.str();
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
    return c;
}

} // namespace blocklie
