"""Simulated moment tables for the panel unit-root statistics.

Generated by tools/calibrate_unitroot_tables.py (do not edit by hand):
seed 20240117, 80000 replications per group-mean cell,
4000 panels of 64 entities per pooled-adjustment cell.
Regression keys: nc = none, c = intercept, ct = intercept and trend.
"""

# regression -> lag -> (n_eff grid, mean of t, variance of t)
IPS_MOMENTS = {
    "c": {
        0: (
            (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.50522, -1.50801, -1.51977, -1.51440, -1.51552, -1.52198, -1.52369, -1.52840, -1.52443, -1.52889, -1.52969, -1.53106, -1.53024, -1.52989),
            (1.07542, 0.96209, 0.91547, 0.87601, 0.84127, 0.81892, 0.79444, 0.78032, 0.76496, 0.73512, 0.72929, 0.72118, 0.71672, 0.70988),
        ),
        1: (
            (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.49133, -1.50045, -1.49977, -1.50744, -1.50315, -1.51375, -1.52083, -1.51823, -1.52252, -1.52604, -1.53080, -1.53185, -1.52474, -1.53081),
            (1.24744, 1.06545, 0.99931, 0.94424, 0.91095, 0.86241, 0.83092, 0.80117, 0.78383, 0.75573, 0.74147, 0.72615, 0.72327, 0.71267),
        ),
        2: (
            (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.32173, -1.36170, -1.38482, -1.41424, -1.42098, -1.44682, -1.46357, -1.47734, -1.49115, -1.49888, -1.51292, -1.51881, -1.52382, -1.52551),
            (1.41160, 1.15839, 1.07218, 0.98856, 0.97348, 0.90619, 0.87037, 0.82077, 0.79710, 0.77023, 0.75521, 0.73338, 0.72298, 0.70717),
        ),
        3: (
            (13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.34774, -1.36394, -1.40245, -1.40723, -1.43473, -1.44663, -1.47021, -1.48271, -1.49532, -1.50999, -1.51874, -1.52538, -1.53177),
            (1.30421, 1.18836, 1.08238, 1.02964, 0.95963, 0.92107, 0.85260, 0.82061, 0.78099, 0.76350, 0.74962, 0.73489, 0.71052),
        ),
        4: (
            (13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.22739, -1.25968, -1.30053, -1.32764, -1.36868, -1.39547, -1.43762, -1.45360, -1.47224, -1.49617, -1.50131, -1.51266, -1.52430),
            (1.42034, 1.29022, 1.15110, 1.09692, 1.00510, 0.94887, 0.89234, 0.84445, 0.80167, 0.77455, 0.75000, 0.74312, 0.71058),
        ),
        5: (
            (13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.20658, -1.24470, -1.28820, -1.29912, -1.34993, -1.38436, -1.41895, -1.44828, -1.47518, -1.48879, -1.50337, -1.51689, -1.52616),
            (1.61826, 1.40367, 1.24154, 1.17358, 1.06584, 0.97929, 0.91074, 0.85573, 0.81667, 0.78039, 0.75745, 0.74245, 0.72101),
        ),
        6: (
            (15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.14784, -1.20031, -1.22427, -1.28234, -1.32848, -1.37876, -1.40989, -1.44943, -1.46767, -1.49270, -1.51277, -1.52235),
            (1.51690, 1.31428, 1.22708, 1.11409, 1.02802, 0.94660, 0.89312, 0.83502, 0.79817, 0.76182, 0.73802, 0.72373),
        ),
        7: (
            (15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.12769, -1.18373, -1.21617, -1.26624, -1.31312, -1.36848, -1.40407, -1.44489, -1.46844, -1.49641, -1.50700, -1.51900),
            (1.67641, 1.42697, 1.31510, 1.16838, 1.06311, 0.97406, 0.91474, 0.85359, 0.80244, 0.76586, 0.74144, 0.72934),
        ),
        8: (
            (18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.10380, -1.14063, -1.21064, -1.26198, -1.32554, -1.36585, -1.41885, -1.44941, -1.47961, -1.49397, -1.51472),
            (1.52300, 1.39169, 1.21126, 1.12805, 1.01763, 0.93719, 0.86866, 0.81456, 0.77176, 0.74768, 0.72963),
        ),
    },
    "ct": {
        0: (
            (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-2.15972, -2.16216, -2.16781, -2.16642, -2.17072, -2.16796, -2.17231, -2.17515, -2.17758, -2.17606, -2.17564, -2.17882, -2.18075, -2.18066),
            (1.12548, 0.92960, 0.85902, 0.80079, 0.76022, 0.71603, 0.68853, 0.66241, 0.63766, 0.61602, 0.59584, 0.58614, 0.57793, 0.56851),
        ),
        1: (
            (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-2.17542, -2.16662, -2.16928, -2.16315, -2.16867, -2.17216, -2.17459, -2.17725, -2.17971, -2.18040, -2.17982, -2.17703, -2.17945, -2.17627),
            (1.43085, 1.09921, 0.98508, 0.88502, 0.83506, 0.77701, 0.73086, 0.67696, 0.64880, 0.63005, 0.59820, 0.58655, 0.58114, 0.56743),
        ),
        2: (
            (13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.96601, -1.99798, -2.02641, -2.04671, -2.07409, -2.09570, -2.12143, -2.13092, -2.14412, -2.15396, -2.16662, -2.16859, -2.17260),
            (1.17107, 1.04980, 0.93374, 0.87943, 0.79762, 0.75035, 0.69251, 0.66294, 0.63597, 0.61284, 0.59934, 0.58249, 0.56932),
        ),
        3: (
            (13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.94012, -1.97432, -2.01091, -2.03564, -2.06492, -2.09157, -2.11679, -2.12947, -2.14113, -2.15947, -2.16293, -2.17182, -2.18094),
            (1.42435, 1.22108, 1.03588, 0.97889, 0.87322, 0.79742, 0.72662, 0.68627, 0.65149, 0.61619, 0.60707, 0.58505, 0.57247),
        ),
        4: (
            (13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.77915, -1.81882, -1.88061, -1.91329, -1.96681, -2.01418, -2.06080, -2.08879, -2.11437, -2.13323, -2.15114, -2.16323, -2.17548),
            (1.62364, 1.31825, 1.13108, 1.04854, 0.91808, 0.83770, 0.75249, 0.70846, 0.65953, 0.63215, 0.60255, 0.58713, 0.57055),
        ),
        5: (
            (15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.79127, -1.85931, -1.89199, -1.95228, -1.99508, -2.05244, -2.08783, -2.11594, -2.13571, -2.15428, -2.16463, -2.16961),
            (1.58256, 1.29088, 1.17422, 0.99957, 0.89260, 0.80205, 0.73160, 0.67334, 0.63775, 0.60544, 0.58848, 0.57230),
        ),
        6: (
            (15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.66893, -1.73897, -1.78239, -1.86509, -1.91777, -1.99574, -2.03846, -2.07929, -2.11269, -2.13429, -2.15801, -2.16568),
            (1.73979, 1.38936, 1.24101, 1.05864, 0.94621, 0.82376, 0.75328, 0.69094, 0.64928, 0.61294, 0.58544, 0.57265),
        ),
        7: (
            (18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.71051, -1.76545, -1.83797, -1.90941, -1.98370, -2.02460, -2.07316, -2.11145, -2.13481, -2.15502, -2.17022),
            (1.55778, 1.38601, 1.15333, 1.00997, 0.87052, 0.79164, 0.71259, 0.66647, 0.62978, 0.60589, 0.57578),
        ),
        8: (
            (18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
            (-1.60644, -1.65984, -1.75953, -1.83218, -1.92622, -1.98304, -2.04298, -2.08483, -2.12015, -2.14483, -2.16923),
            (1.71413, 1.46361, 1.21028, 1.06167, 0.90061, 0.81376, 0.72893, 0.66537, 0.62609, 0.60443, 0.57954),
        ),
    },
}

# regression -> (t_tilde grid, mu*, sigma*)
LLC_ADJUSTMENTS = {
    "nc": (
        (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
        (0.01106, 0.00388, 0.00397, -0.00114, 0.00053, 0.00138, -0.00063, -0.00046, -0.00299, -0.00407, -0.00493, -0.00606, -0.00591, -0.00269),
        (1.17822, 1.12368, 1.08630, 1.05444, 1.07860, 1.05468, 1.00992, 1.02570, 1.01836, 1.00934, 1.01842, 1.02618, 0.99596, 0.99744),
    ),
    "c": (
        (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
        (-0.98257, -0.84038, -0.81744, -0.75219, -0.72311, -0.68822, -0.66736, -0.63054, -0.60158, -0.58221, -0.55934, -0.54552, -0.53195, -0.51891),
        (1.16379, 1.07009, 1.01743, 0.94092, 0.93698, 0.88698, 0.87398, 0.86323, 0.80462, 0.79287, 0.77683, 0.76690, 0.73131, 0.73155),
    ),
    "ct": (
        (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
        (-1.01540, -0.86166, -0.83219, -0.76654, -0.73494, -0.69906, -0.67670, -0.63834, -0.60666, -0.58533, -0.56179, -0.54831, -0.53238, -0.51932),
        (1.66826, 1.33104, 1.26582, 1.14610, 1.07478, 1.00427, 0.95096, 0.86237, 0.82247, 0.74794, 0.69208, 0.66491, 0.59926, 0.56557),
    ),
}

# (t_tilde grid, per-entity mean, ratio covariance, scale)
BREITUNG_ADJUSTMENTS = (
    (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
    (-0.02539, -0.02212, -0.01864, -0.01574, -0.01656, -0.01084, -0.00781, -0.00592, -0.00573, -0.00566, -0.00406, -0.00215, -0.00345, -0.00067),
    (-0.28264, -0.27278, -0.30777, -0.30892, -0.26486, -0.33464, -0.39162, -0.40339, -0.38795, -0.35438, -0.37512, -0.41888, -0.37512, -0.40229),
    (0.94990, 0.95430, 0.95750, 0.95843, 0.96382, 0.97150, 0.97557, 0.97821, 0.98341, 0.98487, 0.99102, 0.98938, 1.00102, 0.99561),
)

# regression -> (n_obs grid, mean of LM, variance of LM, skewness of LM)
HADRI_MOMENTS = {
    "c": (
        (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
        (0.183861, 0.179162, 0.177612, 0.175993, 0.174382, 0.172832, 0.172007, 0.170704, 0.170106, 0.168858, 0.168416, 0.167616, 0.167747, 0.166804),
        (0.0169533, 0.0180156, 0.0186331, 0.0192607, 0.0192763, 0.0199614, 0.0203933, 0.0208669, 0.0211877, 0.0213491, 0.0216603, 0.0219503, 0.0220850, 0.0220701),
        (1.6076, 1.8051, 1.9014, 1.9836, 2.0445, 2.1666, 2.2160, 2.2962, 2.3467, 2.3939, 2.4461, 2.5014, 2.5039, 2.5359),
    ),
    "ct": (
        (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500),
        (0.079921, 0.076907, 0.075571, 0.073981, 0.073416, 0.072010, 0.071273, 0.070100, 0.069294, 0.068634, 0.068047, 0.067500, 0.067163, 0.066942),
        (0.0011547, 0.0013002, 0.0013589, 0.0014182, 0.0014699, 0.0015203, 0.0015721, 0.0016107, 0.0016282, 0.0016658, 0.0016938, 0.0017071, 0.0017216, 0.0017291),
        (1.1909, 1.3765, 1.4348, 1.5245, 1.5718, 1.6636, 1.7108, 1.7957, 1.8378, 1.8880, 1.9483, 1.9863, 1.9908, 1.9900),
    ),
}
