#include "covercraft/code_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace covercraft {

namespace {

std::string strip(const std::string& line) {
    std::size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    std::size_t end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

// Recognizes the writer's "# n=<len>" directive inside a comment line.
std::optional<unsigned> parse_length_directive(const std::string& comment) {
    std::size_t pos = comment.find("n=");
    if (pos == std::string::npos) return std::nullopt;
    unsigned value = 0;
    bool any = false;
    for (std::size_t i = pos + 2; i < comment.size() && comment[i] >= '0' && comment[i] <= '9'; ++i) {
        value = value * 10 + static_cast<unsigned>(comment[i] - '0');
        any = true;
    }
    if (!any) return std::nullopt;
    return value;
}

}  // namespace

Code read_code(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<unsigned> declared_length;
    std::optional<unsigned> data_length;
    std::vector<std::uint64_t> masks;
    std::unordered_map<std::uint64_t, std::size_t> first_seen;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            if (!declared_length) declared_length = parse_length_directive(text);
            continue;
        }
        Word w = [&] {
            try {
                return Word::from_string(text);
            } catch (const std::invalid_argument& e) {
                throw parse_error(line_no, e.what());
            }
        }();
        if (data_length && w.length() != *data_length)
            throw parse_error(line_no, "word length " + std::to_string(w.length()) +
                                           " differs from earlier length " +
                                           std::to_string(*data_length));
        data_length = w.length();
        auto [it, inserted] = first_seen.emplace(w.bits(), line_no);
        if (!inserted)
            throw parse_error(line_no, "duplicate word '" + text + "' (first seen on line " +
                                           std::to_string(it->second) + ")");
        masks.push_back(w.bits());
    }

    if (data_length) {
        if (declared_length && *declared_length != *data_length)
            throw parse_error(line_no, "declared length n=" + std::to_string(*declared_length) +
                                           " disagrees with word length " +
                                           std::to_string(*data_length));
        return Code(*data_length, std::move(masks));
    }
    if (declared_length) return Code(*declared_length);
    throw parse_error(line_no, "no words and no '# n=<length>' directive; cannot infer length");
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    try {
        return read_code(in);
    } catch (const parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_code(std::ostream& out, const Code& code) {
    out << "# n=" << code.length() << "\n";
    for (std::uint64_t m : code.masks()) out << Word(code.length(), m).str() << "\n";
}

void write_code_file(const std::string& path, const Code& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_code(out, code);
    if (!out) throw std::runtime_error("failed writing code file: " + path);
}

}  // namespace covercraft
