"""Preset generators for the sporadic Mathieu groups (0-based points)."""


def _cycles(degree, text):
    images = list(range(degree))
    for body in text.strip("()").split(")("):
        pts = [int(x) - 1 for x in body.split(",")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return images


_M11 = [_cycles(11, "(1,2,3,4,5,6,7,8,9,10,11)"), _cycles(11, "(3,7,11,8)(4,10,5,6)")]
_M12 = [_cycles(12, "(1,2,3,4,5,6,7,8,9,10,11)"), _cycles(12, "(3,7,11,8)(4,10,5,6)"),
        _cycles(12, "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)")]
_M23 = [_cycles(23, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)"),
        _cycles(23, "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)")]
_M24 = [_cycles(24, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)"),
        _cycles(24, "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"),
        _cycles(24, "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)")]

# M11 acting on the 12 cosets of a PSL(2,11) subgroup; derived once from the
# 11-point generators and stored as data
_M11_12 = [[0, 2, 3, 5, 6, 8, 10, 9, 11, 1, 7, 4], [1, 0, 4, 2, 7, 9, 8, 3, 10, 5, 11, 6]]

CATALOG = {
    "M11/11": {"degree": 11, "order": 7920, "generators": _M11},
    "M11/12": {"degree": 12, "order": 7920, "generators": _M11_12},
    "M12/12": {"degree": 12, "order": 95040, "generators": _M12},
    "M23/23": {"degree": 23, "order": 10200960, "generators": _M23},
    "M24/24": {"degree": 24, "order": 244823040, "generators": _M24},
}
