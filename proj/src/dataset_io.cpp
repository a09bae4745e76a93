#include "ul/dataset_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ul {

namespace {

std::map<std::string, std::string> parse_kv(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad header token: " + tok);
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

u32 get_num(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error("header missing " + key);
    return static_cast<u32>(std::stoul(it->second));
}

}  // namespace

ConceptClass parse_class_header(const std::string& line) {
    auto kv = parse_kv(line);
    auto it = kv.find("class");
    if (it == kv.end()) throw std::runtime_error("header missing class");
    const std::string& c = it->second;
    if (c == "thresholds") return ConceptClass::thresholds(get_num(kv, "domain"));
    if (c == "point") return ConceptClass::point_functions(get_num(kv, "domain"));
    if (c == "prodthresh") return ConceptClass::product_thresholds(get_num(kv, "d"), get_num(kv, "m"));
    if (c == "parities") return ConceptClass::parities(get_num(kv, "d"));
    throw std::runtime_error("unknown class: " + c);
}

std::string class_header(const ConceptClass& cls) {
    std::ostringstream ss;
    switch (cls.kind) {
        case ClassKind::Thresholds:
            ss << "class=thresholds domain=" << cls.domain_size;
            break;
        case ClassKind::PointFunctions:
            ss << "class=point domain=" << cls.domain_size;
            break;
        case ClassKind::ProductThresholds:
            ss << "class=prodthresh d=" << cls.dims << " m=" << cls.side;
            break;
        case ClassKind::Parities:
            ss << "class=parities d=" << cls.dims;
            break;
        case ClassKind::Explicit:
            throw std::runtime_error("explicit tables have no file header form");
    }
    return ss.str();
}

ParsedDataset read_dataset(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty dataset file");
    ParsedDataset out{parse_class_header(line), {}};
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto semi = line.find(';');
        if (semi == std::string::npos) throw std::runtime_error("bad item line: " + line);
        Example z;
        {
            std::istringstream xs(line.substr(0, semi));
            std::string part;
            while (std::getline(xs, part, ','))
                z.x.push_back(static_cast<u32>(std::stoul(part)));
        }
        z.y = static_cast<std::uint8_t>(std::stoul(line.substr(semi + 1)));
        if (z.y > 1) throw std::runtime_error("label must be 0 or 1");
        out.items.push_back(std::move(z));
    }
    check_dataset(out.cls, out.items);
    return out;
}

ParsedDataset read_dataset_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_dataset(f);
}

void write_dataset(std::ostream& out, const ConceptClass& cls, const Dataset& S) {
    out << class_header(cls) << "\n";
    for (const auto& z : S) {
        for (std::size_t j = 0; j < z.x.size(); ++j)
            out << (j ? "," : "") << z.x[j];
        out << " ; " << unsigned(z.y) << "\n";
    }
}

void write_blob_file(const std::string& path, const Blob& b) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    std::uint64_t nbits = b.nbits;
    char hdr[8];
    for (int i = 0; i < 8; ++i) hdr[i] = static_cast<char>((nbits >> (8 * i)) & 0xff);
    f.write(hdr, 8);
    f.write(reinterpret_cast<const char*>(b.bytes.data()),
            static_cast<std::streamsize>(b.bytes.size()));
}

Blob read_blob_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    char hdr[8];
    f.read(hdr, 8);
    if (f.gcount() != 8) throw std::runtime_error("truncated blob file " + path);
    std::uint64_t nbits = 0;
    for (int i = 0; i < 8; ++i)
        nbits |= std::uint64_t(static_cast<unsigned char>(hdr[i])) << (8 * i);
    Blob b;
    b.nbits = static_cast<std::size_t>(nbits);
    b.bytes.assign((b.nbits + 7) / 8, 0);
    f.read(reinterpret_cast<char*>(b.bytes.data()), static_cast<std::streamsize>(b.bytes.size()));
    if (static_cast<std::size_t>(f.gcount()) != b.bytes.size())
        throw std::runtime_error("truncated blob file " + path);
    return b;
}

}  // namespace ul
