#include "poincare/io.hpp"

#include <sstream>

namespace poincare {

namespace {

std::string num(const Real& x) { return to_decimal_string(x); }

Json rect_json(const RectSpec& rect) {
    return Json{{"x_lo", num(rect.x_lo)},
                {"x_hi", num(rect.x_hi)},
                {"y_lo", num(rect.y_lo)},
                {"y_hi", num(rect.y_hi)}};
}

Json record_json(const ZeroRecord& rec) {
    Json j{{"segment", zone_tag_name(rec.segment)},
           {"method", method_name(rec.method)},
           {"re", num(rec.re)},
           {"im", num(rec.im)},
           {"half_width", num(rec.half_width)},
           {"residual_log", num(rec.residual_log)},
           {"weight", num(rec.weight)}};
    j["deviation"] = rec.deviation ? Json(num(*rec.deviation)) : Json(nullptr);
    return j;
}

}  // namespace

Json meta_json(const Meta& meta) {
    return Json{{"k", meta.k},
                {"m", meta.m},
                {"alpha", num(meta.alpha)},
                {"precision_bits", meta.precision_bits},
                {"version", kToolVersion}};
}

Json records_json(const Meta& meta, const std::vector<ZeroRecord>& records) {
    Json arr = Json::array();
    for (const ZeroRecord& rec : records) arr.push_back(record_json(rec));
    return Json{{"meta", meta_json(meta)}, {"records", arr}};
}

std::string records_csv(const Meta& meta, const std::vector<ZeroRecord>& records) {
    std::ostringstream os;
    os << "k,m,alpha,precision_bits,version,segment,method,re,im,half_width,residual_log,"
          "deviation,weight\n";
    for (const ZeroRecord& rec : records) {
        os << meta.k << ',' << meta.m << ',' << num(meta.alpha) << ',' << meta.precision_bits
           << ',' << kToolVersion << ',' << zone_tag_name(rec.segment) << ','
           << method_name(rec.method) << ',' << num(rec.re) << ',' << num(rec.im) << ','
           << num(rec.half_width) << ',' << num(rec.residual_log) << ','
           << (rec.deviation ? num(*rec.deviation) : std::string()) << ',' << num(rec.weight)
           << '\n';
    }
    return os.str();
}

Json catalog_json(const Meta& meta, const Catalog& catalog) {
    Json j = records_json(meta, catalog.records);
    const CatalogAccounting& acc = catalog.accounting;
    j["accounting"] = Json{{"arc_count", acc.arc_count},
                           {"lrho_count", acc.lrho_count},
                           {"li_count", acc.li_count},
                           {"gamma_count", acc.gamma_count},
                           {"interior_count", acc.interior_count},
                           {"weighted_total", num(acc.weighted_total)},
                           {"k_over_12", num(acc.k_over_12)},
                           {"residue", num(acc.residue)}};
    return j;
}

Json prediction_json(const Meta& meta, const PredictionReport& report) {
    Json p{{"alpha", num(report.alpha)}, {"arc_lower", num(report.arc_lower)}};
    p["f_inv_alpha"] = report.f_inv_alpha ? Json(num(*report.f_inv_alpha)) : Json(nullptr);
    p["p_rho"] = report.p_rho ? Json(num(*report.p_rho)) : Json(nullptr);
    p["gamma_count"] = report.gamma_count ? Json(num(*report.gamma_count)) : Json(nullptr);
    p["closure_defect"] = report.closure_defect ? Json(num(*report.closure_defect)) : Json(nullptr);
    if (report.li) {
        Json w{{"a", num(report.li->a)}, {"b", num(report.li->b)}};
        w["t0"] = report.li->t0 ? Json(num(*report.li->t0)) : Json(nullptr);
        p["li_window"] = w;
    } else {
        p["li_window"] = nullptr;
    }
    return Json{{"meta", meta_json(meta)}, {"prediction", p}};
}

std::string prediction_csv(const Meta& meta, const PredictionReport& report) {
    std::ostringstream os;
    os << "key,value\n";
    os << "k," << meta.k << "\nm," << meta.m << "\nalpha," << num(meta.alpha)
       << "\nprecision_bits," << meta.precision_bits << "\nversion," << kToolVersion << '\n';
    os << "arc_lower," << num(report.arc_lower) << '\n';
    if (report.f_inv_alpha) os << "f_inv_alpha," << num(*report.f_inv_alpha) << '\n';
    if (report.p_rho) os << "p_rho," << num(*report.p_rho) << '\n';
    if (report.gamma_count) os << "gamma_count," << num(*report.gamma_count) << '\n';
    if (report.closure_defect) os << "closure_defect," << num(*report.closure_defect) << '\n';
    if (report.li) {
        os << "li_window_a," << num(report.li->a) << "\nli_window_b," << num(report.li->b) << '\n';
        if (report.li->t0) os << "li_window_t0," << num(*report.li->t0) << '\n';
    }
    return os.str();
}

Json count_json(const Meta& meta, const RectSpec& rect, int count) {
    return Json{{"meta", meta_json(meta)}, {"rect", rect_json(rect)}, {"winding", count}};
}

std::string count_csv(const Meta& meta, const RectSpec& rect, int count) {
    std::ostringstream os;
    os << "key,value\n";
    os << "k," << meta.k << "\nm," << meta.m << "\nalpha," << num(meta.alpha)
       << "\nprecision_bits," << meta.precision_bits << "\nversion," << kToolVersion << '\n';
    os << "x_lo," << num(rect.x_lo) << "\nx_hi," << num(rect.x_hi) << "\ny_lo," << num(rect.y_lo)
       << "\ny_hi," << num(rect.y_hi) << '\n';
    os << "winding," << count << '\n';
    return os.str();
}

Json dominance_json(const Meta& meta, const std::vector<DominanceCell>& cells) {
    Json arr = Json::array();
    for (const DominanceCell& cell : cells) {
        arr.push_back(Json{{"x", num(cell.center.x)},
                           {"y", num(cell.center.y)},
                           {"c", cell.best.c},
                           {"d", cell.best.d},
                           {"margin", num(cell.margin)},
                           {"tie", cell.tie}});
    }
    return Json{{"meta", meta_json(meta)}, {"cells", arr}};
}

std::string dominance_csv(const Meta& meta, const std::vector<DominanceCell>& cells) {
    std::ostringstream os;
    os << "k,m,alpha,precision_bits,version,x,y,c,d,margin,tie\n";
    for (const DominanceCell& cell : cells) {
        os << meta.k << ',' << meta.m << ',' << num(meta.alpha) << ',' << meta.precision_bits
           << ',' << kToolVersion << ',' << num(cell.center.x) << ',' << num(cell.center.y) << ','
           << cell.best.c << ',' << cell.best.d << ',' << num(cell.margin) << ','
           << (cell.tie ? "true" : "false") << '\n';
    }
    return os.str();
}

Json table_json(const Meta& meta, const std::vector<TableRow>& rows) {
    Json arr = Json::array();
    for (const TableRow& row : rows) {
        arr.push_back(Json{{"re", num(row.re)},
                           {"im", num(row.im)},
                           {"deviation", num(row.deviation)},
                           {"log10_deviation", num(row.log10_deviation)},
                           {"precision_limited", row.precision_limited}});
    }
    return Json{{"meta", meta_json(meta)}, {"rows", arr}};
}

std::string table_csv(const Meta& meta, const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "k,m,alpha,precision_bits,version,re,im,deviation,log10_deviation,precision_limited\n";
    for (const TableRow& row : rows) {
        os << meta.k << ',' << meta.m << ',' << num(meta.alpha) << ',' << meta.precision_bits
           << ',' << kToolVersion << ',' << num(row.re) << ',' << num(row.im) << ','
           << num(row.deviation) << ',' << num(row.log10_deviation) << ','
           << (row.precision_limited ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace poincare
