#include "z2z4/code_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace z2z4 {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

CodeFile parse_code_file(std::string_view text)
{
    static const std::regex header(R"(alpha\s*=\s*(\d+)\s+beta\s*=\s*(\d+))");
    CodeFile file;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (!have_header) {
            std::cmatch m;
            if (!std::regex_match(line.begin(), line.end(), m, header))
                throw ParseError("expected header \"alpha=<A> beta=<B>\"", line_no);
            file.alpha = std::stoul(m[1].str());
            file.beta = std::stoul(m[2].str());
            if (file.alpha > kMaxPartLength || file.beta > kMaxPartLength)
                throw ParseError("shape exceeds the 64-position limit per part", line_no);
            if (file.alpha + file.beta == 0) throw ParseError("alpha + beta must be positive", line_no);
            have_header = true;
            continue;
        }

        MixedVector v;
        try {
            v = MixedVector::parse(line);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        if (v.alpha() != file.alpha || v.beta() != file.beta)
            throw ParseError("row has shape (" + std::to_string(v.alpha()) + ", " + std::to_string(v.beta()) +
                                 "), header says (" + std::to_string(file.alpha) + ", " + std::to_string(file.beta) +
                                 ")",
                             line_no);
        file.rows.push_back(v);
    }
    if (!have_header) throw ParseError("missing header \"alpha=<A> beta=<B>\"");
    return file;
}

std::string format_code_file(const Z2Z4Code& code, std::string_view comment)
{
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << '\n';
    out << "alpha=" << code.alpha() << " beta=" << code.beta() << '\n';
    for (const auto& row : code.reduced().rows()) out << row.to_string() << '\n';
    return out.str();
}

CodeFile read_code_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_file(buf.str());
}

void write_code_file(const std::string& path, const Z2Z4Code& code, std::string_view comment)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << format_code_file(code, comment);
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace z2z4
