#include "toupie/module_io.hpp"

#include <sstream>

namespace toupie {

std::string serialize_module(const Representation& M) {
    std::ostringstream os;
    os << "module\n";
    os << "dims";
    for (int d : M.dims) os << " " << d;
    os << "\n";
    for (std::size_t a = 0; a < M.arrows.size(); ++a) {
        const Matrix& m = M.arrows[a];
        if (m.is_zero()) continue;
        os << "arrow " << a << " " << m.rows() << " " << m.cols() << " :";
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) os << " " << m.at(r, c).to_string();
        os << "\n";
    }
    return os.str();
}

Representation parse_module(std::shared_ptr<const GeneralBoundQuiver> q, const std::string& text) {
    const FieldSpec& f = q->field;
    Representation M;
    M.quiver = q;
    bool have_dims = false;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "module") {
            saw_header = true;
        } else if (kw == "dims") {
            if (have_dims) throw ParseError(lineno, "duplicate dims line");
            int d;
            while (ls >> d) M.dims.push_back(d);
            if (static_cast<int>(M.dims.size()) != q->num_vertices())
                throw ParseError(lineno, "dims count does not match the quiver");
            for (int d2 : M.dims)
                if (d2 < 0) throw ParseError(lineno, "negative dimension");
            have_dims = true;
            for (int a = 0; a < q->num_arrows(); ++a) {
                const Arrow& ar = q->arrows[static_cast<std::size_t>(a)];
                M.arrows.emplace_back(f, M.dim_at(ar.dst), M.dim_at(ar.src));
            }
        } else if (kw == "arrow") {
            if (!have_dims) throw ParseError(lineno, "arrow line before dims");
            int a, rows, cols;
            std::string colon;
            if (!(ls >> a >> rows >> cols >> colon) || colon != ":")
                throw ParseError(lineno, "expected 'arrow K R C : entries'");
            if (a < 0 || a >= q->num_arrows()) throw ParseError(lineno, "arrow index out of range");
            const Arrow& ar = q->arrows[static_cast<std::size_t>(a)];
            if (rows != M.dim_at(ar.dst) || cols != M.dim_at(ar.src))
                throw ParseError(lineno, "arrow matrix shape does not match dims");
            Matrix m(f, rows, cols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) {
                    std::string tok;
                    if (!(ls >> tok)) throw ParseError(lineno, "missing matrix entry");
                    try {
                        m.at(r, c) = Scalar::parse(f, tok);
                    } catch (const std::exception& e) {
                        throw ParseError(lineno, e.what());
                    }
                }
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing data after matrix entries");
            M.arrows[static_cast<std::size_t>(a)] = std::move(m);
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!saw_header) throw ParseError(lineno, "missing 'module' header");
    if (!have_dims) throw ParseError(lineno, "missing dims line");
    return M;
}

}  // namespace toupie
