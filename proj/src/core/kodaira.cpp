#include "kodaira.hpp"

#include "error.hpp"

namespace edsfn {

std::string FibreType::name() const {
    switch (kind) {
        case Kodaira::Good: return "I0";
        case Kodaira::In: return "I" + std::to_string(n);
        case Kodaira::II: return "II";
        case Kodaira::III: return "III";
        case Kodaira::IV: return "IV";
        case Kodaira::InStar: return "I" + std::to_string(n) + "*";
        case Kodaira::IVStar: return "IV*";
        case Kodaira::IIIStar: return "III*";
        case Kodaira::IIStar: return "II*";
    }
    return "?";
}

long FibreType::components() const {
    switch (kind) {
        case Kodaira::Good: return 1;
        case Kodaira::In: return n;
        case Kodaira::II: return 1;
        case Kodaira::III: return 2;
        case Kodaira::IV: return 3;
        case Kodaira::InStar: return n + 5;
        case Kodaira::IVStar: return 7;
        case Kodaira::IIIStar: return 8;
        case Kodaira::IIStar: return 9;
    }
    return 1;
}

long FibreType::euler() const {
    if (is_good()) return 0;
    if (kind == Kodaira::In) return n;
    return components() + 1;
}

long FibreType::conductor_exponent() const {
    if (is_good()) return 0;
    return kind == Kodaira::In ? 1 : 2;
}

GroupKind FibreType::group_kind() const {
    switch (kind) {
        case Kodaira::In: return n > 1 ? GroupKind::Cyclic : GroupKind::Trivial;
        case Kodaira::InStar: return n % 2 == 0 ? GroupKind::Klein : GroupKind::Cyclic;
        case Kodaira::III:
        case Kodaira::IIIStar:
        case Kodaira::IV:
        case Kodaira::IVStar: return GroupKind::Cyclic;
        default: return GroupKind::Trivial;
    }
}

long FibreType::group_order() const {
    switch (kind) {
        case Kodaira::In: return n > 0 ? n : 1;
        case Kodaira::InStar: return 4;
        case Kodaira::III:
        case Kodaira::IIIStar: return 2;
        case Kodaira::IV:
        case Kodaira::IVStar: return 3;
        default: return 1;
    }
}

long FibreType::group_exponent() const {
    if (kind == Kodaira::InStar) return n % 2 == 0 ? 2 : 4;
    return group_order();
}

std::string FibreType::group_name() const {
    switch (group_kind()) {
        case GroupKind::Trivial: return "trivial";
        case GroupKind::Klein: return "Z/2xZ/2";
        case GroupKind::Cyclic: return "Z/" + std::to_string(group_order());
    }
    return "?";
}

long component_multiple(const FibreType& type, long i, long k) {
    if (!valid_component(type, i)) raise(ErrorCode::InvalidComponent, std::to_string(i) + " in " + type.name());
    if (type.group_kind() == GroupKind::Klein) return (k % 2 == 0) ? 0 : i;
    const long m = type.group_order();
    long r = (i * (k % m)) % m;
    return r < 0 ? r + m : r;
}

bool valid_component(const FibreType& type, long i) {
    return i >= 0 && i < type.group_order();
}

FibreType kodaira_type(long vC4, long vC6, long vDelta) {
    (void)vC6;
    auto bad = [&](const char* why) -> FibreType {
        raise(ErrorCode::InconsistentValuations, std::string(why) + " (vC4=" + std::to_string(vC4) +
                                                     ", vDelta=" + std::to_string(vDelta) + ")");
    };
    if (vDelta < 0 || vC4 < 0) bad("negative valuation at a minimal model");
    if (vDelta == 0) return {Kodaira::Good, 0};
    if (vC4 == 0) return {Kodaira::In, vDelta};
    if (vDelta >= 12 && vC4 >= 4) {
        raise(ErrorCode::NotMinimal, "vC4=" + std::to_string(vC4) + ", vDelta=" + std::to_string(vDelta));
    }
    switch (vDelta) {
        case 2: return {Kodaira::II, 0};
        case 3:
            if (vC4 == 1) return {Kodaira::III, 0};
            break;
        case 4:
            if (vC4 >= 2) return {Kodaira::IV, 0};
            break;
        case 6:
            if (vC4 >= 2) return {Kodaira::InStar, 0};
            break;
        case 8:
            if (vC4 >= 3) return {Kodaira::IVStar, 0};
            break;
        case 9:
            if (vC4 == 3) return {Kodaira::IIIStar, 0};
            break;
        case 10:
            if (vC4 >= 4) return {Kodaira::IIStar, 0};
            break;
        default: break;
    }
    if (vDelta > 6 && vC4 == 2) return {Kodaira::InStar, vDelta - 6};
    return bad("no fibre type matches");
}

}  // namespace edsfn
