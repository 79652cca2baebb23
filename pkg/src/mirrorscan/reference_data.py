"""Reference scan samples: ideal pattern and two tracked runs.

Each row is ``(t_s, phi_lm_deg, phi_sm_deg, x_m, y_m)`` sampled every 4 ms.
``IDEAL_SCAN`` covers one large-mirror period of the ideal sinusoidal scan at
range 200 m. ``TRACKED_SCAN`` comes from the friction plants under sampled
time-optimal tracking (large mirror 4 ms, small mirror 4 ms demand with 1 ms
control, both at 20 V); ``SYNCHRONIZED_SCAN`` is the same set-up after the
demand phases were advanced to cancel the tracking lag. Both cover 0-2 s.
"""

# fmt: off
IDEAL_SCAN = (
    (0.0, 8.35, 0.0, 60.0, 0.0),
    (0.004, 8.33, -1.72, 59.88, -12.57),
    (0.008, 8.28, -3.01, 59.5, -22.07),
    (0.012, 8.2, -3.56, 58.88, -26.1),
    (0.016, 8.09, -3.23, 58.01, -23.61),
    (0.02, 7.94, -2.1, 56.91, -15.28),
    (0.024, 7.76, -0.45, 55.57, -3.25),
    (0.028, 7.56, 1.31, 54.0, 9.52),
    (0.032, 7.32, 2.75, 52.22, 19.94),
    (0.036, 7.05, 3.51, 50.24, 25.41),
    (0.04, 6.76, 3.4, 48.05, 24.53),
    (0.044, 6.43, 2.44, 45.69, 17.57),
    (0.048, 6.09, 0.89, 43.15, 6.35),
    (0.052, 5.72, -0.89, 40.44, -6.33),
    (0.056, 5.32, -2.44, 37.59, -17.43),
    (0.06, 4.91, -3.4, 34.6, -24.2),
    (0.064, 4.47, -3.51, 31.49, -24.94),
    (0.068, 4.02, -2.75, 28.27, -19.48),
    (0.072, 3.56, -1.31, 24.95, -9.27),
    (0.076, 3.07, 0.45, 21.54, 3.15),
    (0.08, 2.58, 2.1, 18.06, 14.76),
    (0.084, 2.08, 3.23, 14.52, 22.74),
    (0.088, 1.56, 3.56, 10.93, 25.08),
    (0.092, 1.05, 3.01, 7.31, 21.17),
    (0.096, 0.52, 1.72, 3.66, 12.04),
    (0.1, 0.0, 0.0, 0.0, 0.0),
    (0.104, -0.52, -1.72, -3.66, -12.04),
    (0.108, -1.05, -3.01, -7.31, -21.17),
    (0.112, -1.56, -3.56, -10.93, -25.08),
    (0.116, -2.08, -3.23, -14.52, -22.74),
    (0.12, -2.58, -2.1, -18.06, -14.76),
    (0.124, -3.07, -0.45, -21.54, -3.15),
    (0.128, -3.56, 1.31, -24.95, 9.27),
    (0.132, -4.02, 2.75, -28.27, 19.48),
    (0.136, -4.47, 3.51, -31.49, 24.94),
    (0.14, -4.91, 3.4, -34.6, 24.2),
    (0.144, -5.32, 2.44, -37.59, 17.43),
    (0.148, -5.72, 0.89, -40.44, 6.33),
    (0.152, -6.09, -0.89, -43.15, -6.35),
    (0.156, -6.43, -2.44, -45.69, -17.57),
    (0.16, -6.76, -3.4, -48.05, -24.53),
    (0.164, -7.05, -3.51, -50.24, -25.41),
    (0.168, -7.32, -2.75, -52.22, -19.94),
    (0.172, -7.56, -1.31, -54.0, -9.52),
    (0.176, -7.76, 0.45, -55.57, 3.25),
    (0.18, -7.94, 2.1, -56.91, 15.28),
    (0.184, -8.09, 3.23, -58.01, 23.61),
    (0.188, -8.2, 3.56, -58.88, 26.1),
    (0.192, -8.28, 3.01, -59.5, 22.07),
    (0.196, -8.33, 1.72, -59.88, 12.57),
    (0.2, -8.35, 0.0, -60.0, 0.0),
    (0.204, -8.33, -1.72, -59.88, -12.57),
    (0.208, -8.28, -3.01, -59.5, -22.07),
    (0.212, -8.2, -3.56, -58.88, -26.1),
    (0.216, -8.09, -3.23, -58.01, -23.61),
    (0.22, -7.94, -2.1, -56.91, -15.28),
    (0.224, -7.76, -0.45, -55.57, -3.25),
    (0.228, -7.56, 1.31, -54.0, 9.52),
    (0.232, -7.32, 2.75, -52.22, 19.94),
    (0.236, -7.05, 3.51, -50.24, 25.41),
    (0.24, -6.76, 3.4, -48.05, 24.53),
    (0.244, -6.43, 2.44, -45.69, 17.57),
    (0.248, -6.09, 0.89, -43.15, 6.35),
    (0.252, -5.72, -0.89, -40.44, -6.33),
    (0.256, -5.32, -2.44, -37.59, -17.43),
    (0.26, -4.91, -3.4, -34.6, -24.2),
    (0.264, -4.47, -3.51, -31.49, -24.94),
    (0.268, -4.02, -2.75, -28.27, -19.48),
    (0.272, -3.56, -1.31, -24.95, -9.27),
    (0.276, -3.07, 0.45, -21.54, 3.15),
    (0.28, -2.58, 2.1, -18.06, 14.76),
    (0.284, -2.08, 3.23, -14.52, 22.74),
    (0.288, -1.56, 3.56, -10.93, 25.08),
    (0.292, -1.05, 3.01, -7.31, 21.17),
    (0.296, -0.52, 1.72, -3.66, 12.04),
    (0.3, 0.0, 0.0, 0.0, 0.0),
    (0.304, 0.52, -1.72, 3.66, -12.04),
    (0.308, 1.05, -3.01, 7.31, -21.17),
    (0.312, 1.56, -3.56, 10.93, -25.08),
    (0.316, 2.08, -3.23, 14.52, -22.74),
    (0.32, 2.58, -2.1, 18.06, -14.76),
    (0.324, 3.07, -0.45, 21.54, -3.15),
    (0.328, 3.56, 1.31, 24.95, 9.27),
    (0.332, 4.02, 2.75, 28.27, 19.48),
    (0.336, 4.47, 3.51, 31.49, 24.94),
    (0.34, 4.91, 3.4, 34.6, 24.2),
    (0.344, 5.32, 2.44, 37.59, 17.43),
    (0.348, 5.72, 0.89, 40.44, 6.33),
    (0.352, 6.09, -0.89, 43.15, -6.35),
    (0.356, 6.43, -2.44, 45.69, -17.57),
    (0.36, 6.76, -3.4, 48.05, -24.53),
    (0.364, 7.05, -3.51, 50.24, -25.41),
    (0.368, 7.32, -2.75, 52.22, -19.94),
    (0.372, 7.56, -1.31, 54.0, -9.52),
    (0.376, 7.76, 0.45, 55.57, 3.25),
    (0.38, 7.94, 2.1, 56.91, 15.28),
    (0.384, 8.09, 3.23, 58.01, 23.61),
    (0.388, 8.2, 3.56, 58.88, 26.1),
    (0.392, 8.28, 3.01, 59.5, 22.07),
    (0.396, 8.33, 1.72, 59.88, 12.57),
    (0.4, 8.35, 0.0, 60.0, 0.0),
)

TRACKED_SCAN = (
    (0.0, 0.0, 0.0, 0.0, 0.0),
    (0.004, 0.0, 0.0, 0.0, 0.0),
    (0.008, 0.043, -0.147, 0.301, -1.025),
    (0.012, 0.203, -0.962, 1.419, -6.731),
    (0.016, 0.48, -2.379, 3.355, -16.672),
    (0.02, 0.872, -3.578, 6.089, -25.16),
    (0.024, 1.375, -3.592, 9.606, -25.277),
    (0.028, 1.986, -2.808, 13.89, -19.74),
    (0.032, 2.704, -1.415, 18.934, -9.949),
    (0.036, 3.525, 0.457, 24.733, 3.219),
    (0.04, 4.447, 2.571, 31.295, 18.245),
    (0.044, 5.362, 3.607, 37.877, 25.805),
    (0.048, 6.103, 3.478, 43.263, 25.004),
    (0.052, 6.667, 2.593, 47.406, 18.685),
    (0.056, 7.06, 1.122, 50.309, 8.094),
    (0.06, 7.284, -0.813, 51.979, -5.873),
    (0.064, 7.345, -2.646, 52.435, -19.179),
    (0.068, 7.27, -3.569, 51.87, -25.915),
    (0.072, 7.075, -3.553, 50.421, -25.75),
    (0.076, 6.764, -2.748, 48.116, -19.824),
    (0.08, 6.339, -1.34, 44.991, -9.613),
    (0.084, 5.804, 0.544, 41.082, 3.886),
    (0.088, 5.161, 2.452, 36.423, 17.47),
    (0.092, 4.412, 3.536, 31.051, 25.144),
    (0.096, 3.562, 3.443, 24.993, 24.38),
    (0.1, 2.715, 2.585, 19.013, 18.203),
    (0.104, 1.937, 1.465, 13.544, 10.276),
    (0.108, 1.168, -0.078, 8.158, -0.548),
    (0.112, 0.465, -1.739, 3.248, -12.178),
    (0.116, -0.231, -3.242, -1.609, -22.766),
    (0.12, -0.862, -3.683, -6.017, -25.906),
    (0.124, -1.487, -3.178, -10.394, -22.34),
    (0.128, -2.05, -2.007, -14.339, -14.089),
    (0.132, -2.61, -0.309, -18.271, -2.169),
    (0.136, -3.108, 1.474, -21.784, 10.378),
    (0.14, -3.604, 3.074, -25.296, 21.745),
    (0.144, -4.041, 3.589, -28.399, 25.481),
    (0.148, -4.477, 3.13, -31.512, 22.245),
    (0.152, -4.855, 1.996, -34.222, 14.18),
    (0.156, -5.338, 0.658, -37.706, 4.682),
    (0.16, -5.826, -1.058, -41.247, -7.556),
    (0.164, -6.151, -2.718, -43.611, -19.505),
    (0.168, -6.413, -3.611, -45.535, -26.031),
    (0.172, -6.784, -3.483, -48.266, -25.173),
    (0.176, -7.162, -2.599, -51.07, -18.802),
    (0.18, -7.484, -1.128, -53.469, -8.166),
    (0.184, -7.808, 0.476, -55.899, 3.455),
    (0.188, -7.972, 2.288, -57.136, 16.669),
    (0.192, -8.078, 3.475, -57.94, 25.419),
    (0.196, -8.192, 3.476, -58.805, 25.453),
    (0.2, -8.256, 2.682, -59.29, 19.613),
    (0.204, -8.329, 1.282, -59.843, 9.364),
    (0.208, -8.36, -0.265, -60.077, -1.934),
    (0.212, -8.402, -1.816, -60.396, -13.278),
    (0.216, -8.316, -3.231, -59.745, -23.676),
    (0.22, -8.216, -3.605, -58.985, -26.418),
    (0.224, -8.166, -3.058, -58.604, -22.363),
    (0.228, -8.002, -1.854, -57.364, -13.501),
    (0.232, -7.826, -0.13, -56.033, -0.943),
    (0.236, -7.701, 1.651, -55.096, 11.984),
    (0.24, -7.464, 2.971, -53.324, 21.578),
    (0.244, -7.217, 3.56, -51.479, 25.835),
    (0.248, -7.023, 3.15, -50.04, 22.796),
    (0.252, -6.72, 2.055, -47.792, 14.795),
    (0.256, -6.302, 0.417, -44.722, 2.985),
    (0.26, -5.879, -1.296, -41.627, -9.261),
    (0.264, -5.513, -2.779, -38.969, -19.86),
    (0.268, -5.146, -3.617, -36.315, -25.838),
    (0.272, -4.835, -3.451, -34.08, -24.596),
    (0.276, -4.417, -2.54, -31.085, -18.021),
    (0.28, -3.993, -1.048, -28.06, -7.405),
    (0.284, -3.627, 0.572, -25.457, 4.033),
    (0.288, -3.155, 2.181, -22.115, 15.369),
    (0.292, -2.678, 3.418, -18.75, 24.119),
    (0.296, -2.26, 3.459, -15.812, 24.378),
    (0.3, -1.738, 2.692, -12.148, 18.915),
    (0.304, -1.212, 1.315, -8.466, 9.207),
    (0.308, -0.746, -0.215, -5.212, -1.507),
    (0.312, -0.177, -2.06, -1.239, -14.429),
    (0.316, 0.394, -3.43, 2.751, -24.102),
    (0.32, 0.904, -3.742, 6.312, -26.327),
    (0.324, 1.412, -3.155, 9.863, -22.176),
    (0.328, 1.859, -1.919, 12.998, -13.469),
    (0.332, 2.411, -0.171, 16.87, -1.198),
    (0.336, 2.965, 1.629, 20.776, 11.467),
    (0.34, 3.459, 2.966, 24.263, 20.963),
    (0.344, 3.95, 3.567, 27.753, 25.308),
    (0.348, 4.382, 3.164, 30.833, 22.477),
    (0.352, 4.814, 2.075, 33.926, 14.738),
    (0.356, 5.187, 0.441, 36.615, 3.137),
    (0.36, 5.666, -1.291, 40.084, -9.212),
    (0.364, 6.15, -2.85, 43.61, -20.464),
    (0.368, 6.471, -3.557, 45.957, -25.648),
    (0.372, 6.729, -3.394, 47.861, -24.511),
    (0.376, 7.096, -2.485, 50.579, -17.968),
    (0.38, 7.471, -0.995, 53.37, -7.206),
    (0.384, 7.684, 0.623, 54.969, 4.521),
    (0.388, 7.838, 2.207, 56.131, 16.06),
    (0.392, 8.0, 3.365, 57.346, 24.589),
    (0.396, 8.109, 3.424, 58.175, 25.05),
    (0.4, 8.227, 2.67, 59.065, 19.52),
    (0.404, 8.294, 1.302, 59.574, 9.506),
    (0.408, 8.369, -0.22, 60.15, -1.608),
    (0.412, 8.31, -2.059, 59.696, -15.046),
    (0.416, 8.235, -3.424, 59.127, -25.083),
    (0.42, 8.203, -3.732, 58.886, -27.355),
    (0.424, 8.057, -3.143, 57.776, -22.963),
    (0.428, 7.897, -1.905, 56.572, -13.863),
    (0.432, 7.789, -0.155, 55.758, -1.125),
    (0.436, 7.569, 1.646, 54.103, 11.937),
    (0.44, 7.337, 2.983, 52.372, 21.641),
    (0.444, 7.159, 3.585, 51.044, 26.005),
    (0.448, 6.87, 3.183, 48.901, 23.006),
    (0.452, 6.572, 2.094, 46.7, 15.06),
    (0.456, 6.328, 0.461, 44.91, 3.302),
    (0.46, 5.976, -1.271, 42.333, -9.092),
    (0.464, 5.615, -2.83, 39.712, -20.241),
    (0.468, 5.311, -3.537, 37.511, -25.288),
    (0.472, 4.9, -3.373, 34.546, -24.046),
    (0.476, 4.482, -2.465, 31.55, -17.491),
    (0.48, 4.122, -0.975, 28.978, -6.892),
    (0.484, 3.656, 0.644, 25.664, 4.538),
    (0.488, 3.185, 2.228, 22.328, 15.703),
    (0.492, 2.773, 3.386, 19.42, 23.894),
    (0.496, 2.256, 3.444, 15.785, 24.274),
    (0.5, 1.736, 2.69, 12.133, 18.9),
    (0.504, 1.276, 1.323, 8.911, 9.263),
    (0.508, 0.712, -0.2, 4.971, -1.398),
    (0.512, 0.145, -2.038, 1.015, -14.275),
    (0.516, -0.36, -3.404, -2.51, -23.912),
    (0.52, -0.862, -3.712, -6.022, -26.109),
    (0.524, -1.305, -3.122, -9.12, -21.941),
    (0.528, -1.852, -1.885, -12.95, -13.225),
    (0.532, -2.402, -0.135, -16.811, -0.945),
    (0.536, -2.891, 1.667, -20.254, 11.726),
    (0.54, -3.379, 3.004, -23.697, 21.227),
    (0.544, -3.806, 3.606, -26.731, 25.569),
    (0.548, -4.339, 3.204, -30.523, 22.753),
    (0.552, -4.874, 2.114, -34.36, 15.026),
    (0.556, -5.349, 0.481, -37.783, 3.424),
    (0.56, -5.823, -1.251, -41.218, -8.936),
    (0.564, -6.237, -2.81, -44.243, -20.186),
    (0.568, -6.651, -3.624, -47.289, -26.174),
    (0.572, -6.904, -3.442, -49.153, -24.904),
    (0.576, -7.096, -2.52, -50.581, -18.221),
    (0.58, -7.399, -1.019, -52.835, -7.373),
    (0.584, -7.711, 0.608, -55.17, 4.414),
    (0.588, -7.967, 2.223, -57.103, 16.193),
    (0.592, -8.228, 3.465, -59.076, 25.382),
    (0.596, -8.33, 3.508, -59.854, 25.733),
    (0.6, -8.286, 2.744, -59.517, 20.078),
    (0.604, -8.226, 1.368, -59.059, 9.981),
    (0.608, -8.297, -0.161, -59.601, -1.172),
    (0.612, -8.383, -2.004, -60.257, -14.658),
    (0.616, -8.332, -3.374, -59.862, -24.735),
    (0.62, -8.16, -3.685, -58.558, -26.992),
    (0.624, -7.976, -3.097, -57.165, -22.611),
    (0.628, -7.946, -1.861, -56.941, -13.55),
    (0.632, -7.946, -0.112, -56.945, -0.817),
    (0.636, -7.827, 1.688, -56.047, 12.27),
    (0.64, -7.59, 3.024, -54.265, 21.991),
    (0.644, -7.238, 3.626, -51.632, 26.319),
    (0.648, -6.877, 3.223, -48.957, 23.299),
    (0.652, -6.573, 2.133, -46.713, 15.346),
    (0.656, -6.266, 0.5, -44.46, 3.583),
    (0.66, -6.015, -1.232, -42.618, -8.813),
    (0.664, -5.654, -2.791, -39.993, -19.965),
    (0.668, -5.286, -3.605, -37.326, -25.778),
    (0.672, -4.974, -3.424, -35.079, -24.42),
    (0.676, -4.555, -2.502, -32.072, -17.759),
    (0.68, -4.026, -1.001, -28.29, -7.069),
    (0.684, -3.492, 0.627, -24.503, 4.416),
    (0.688, -3.02, 2.218, -21.161, 15.623),
    (0.692, -2.549, 3.381, -17.84, 23.844),
    (0.696, -2.136, 3.444, -14.943, 24.261),
    (0.7, -1.62, 2.692, -11.319, 18.909),
    (0.704, -1.099, 1.326, -7.676, 9.288),
    (0.708, -0.639, -0.194, -4.459, -1.359),
    (0.712, -0.075, -2.031, -0.521, -14.227),
    (0.716, 0.492, -3.396, 3.434, -23.858),
    (0.72, 0.997, -3.703, 6.963, -26.052),
    (0.724, 1.5, -3.113, 10.481, -21.884),
    (0.728, 1.943, -1.875, 13.586, -13.161),
    (0.732, 2.49, -0.125, 17.428, -0.876),
    (0.736, 3.04, 1.677, 21.305, 11.803),
    (0.74, 3.529, 3.014, 24.765, 21.313),
    (0.744, 4.017, 3.616, 28.228, 25.669),
    (0.748, 4.445, 3.214, 31.281, 22.841),
    (0.752, 4.872, 2.125, 34.348, 15.101),
    (0.756, 5.242, 0.492, 37.011, 3.497),
    (0.76, 5.718, -1.24, 40.455, -8.853),
    (0.764, 6.198, -2.799, 43.958, -20.103),
    (0.768, 6.514, -3.613, 46.28, -26.067),
    (0.772, 6.77, -3.432, 48.16, -24.797),
    (0.776, 7.133, -2.509, 50.854, -18.149),
    (0.78, 7.504, -1.008, 53.623, -7.302),
    (0.784, 7.715, 0.619, 55.199, 4.492),
    (0.788, 7.866, 2.21, 56.338, 16.084),
    (0.792, 8.024, 3.373, 57.53, 24.655),
    (0.796, 8.131, 3.436, 58.337, 25.145),
    (0.8, 8.245, 2.685, 59.205, 19.632),
    (0.804, 8.309, 1.319, 59.693, 9.63),
    (0.808, 8.382, -0.202, 60.249, -1.473),
    (0.812, 8.32, -2.039, 59.778, -14.903),
    (0.816, 8.244, -3.403, 59.194, -24.932),
    (0.82, 8.211, -3.711, 58.947, -27.198),
    (0.824, 8.064, -3.121, 57.832, -22.803),
    (0.828, 7.904, -1.883, 56.622, -13.701),
    (0.832, 7.795, -0.132, 55.803, -0.961),
    (0.836, 7.574, 1.669, 54.144, 12.104),
    (0.84, 7.342, 3.007, 52.408, 21.81),
    (0.844, 7.163, 3.609, 51.075, 26.177),
    (0.848, 6.873, 3.207, 48.928, 23.177),
    (0.852, 6.575, 2.117, 46.722, 15.229),
    (0.856, 6.33, 0.484, 44.928, 3.471),
    (0.86, 5.977, -1.248, 42.347, -8.923),
    (0.864, 5.617, -2.807, 39.722, -20.071),
    (0.868, 5.312, -3.621, 37.517, -25.893),
    (0.872, 4.9, -3.439, 34.549, -24.519),
    (0.876, 4.482, -2.517, 31.549, -17.86),
    (0.88, 4.122, -1.016, 28.974, -7.18),
    (0.884, 3.655, 0.612, 25.657, 4.313),
    (0.888, 3.184, 2.203, 22.318, 15.526),
    (0.892, 2.771, 3.366, 19.407, 23.754),
    (0.896, 2.254, 3.429, 15.768, 24.162),
    (0.9, 1.733, 2.677, 12.114, 18.807),
    (0.904, 1.272, 1.311, 8.889, 9.185),
    (0.908, 0.708, -0.209, 4.945, -1.464),
    (0.912, 0.141, -2.046, 0.988, -14.332),
    (0.916, -0.364, -3.411, -2.541, -23.963),
    (0.92, -0.867, -3.718, -6.056, -26.155),
    (0.924, -1.311, -3.128, -9.155, -21.983),
    (0.928, -1.858, -1.89, -12.988, -13.264),
    (0.932, -2.408, -0.14, -16.852, -0.981),
    (0.936, -2.897, 1.662, -20.298, 11.691),
    (0.94, -3.385, 2.999, -23.743, 21.194),
    (0.944, -3.813, 3.601, -26.78, 25.537),
    (0.948, -4.346, 3.199, -30.573, 22.722),
    (0.952, -4.882, 2.11, -34.413, 14.995),
    (0.956, -5.357, 0.477, -37.839, 3.393),
    (0.96, -5.831, -1.255, -41.276, -8.967),
    (0.964, -6.245, -2.814, -44.304, -20.218),
    (0.968, -6.66, -3.628, -47.352, -26.207),
    (0.972, -6.913, -3.447, -49.219, -24.937),
    (0.976, -7.105, -2.524, -50.648, -18.253),
    (0.98, -7.408, -1.023, -52.905, -7.404),
    (0.984, -7.72, 0.604, -55.242, 4.383),
    (0.988, -7.873, 2.218, -56.389, 16.147),
    (0.992, -7.968, 3.461, -57.105, 25.284),
    (0.996, -8.175, 3.504, -58.676, 25.66),
    (1.0, -8.394, 2.74, -60.34, 20.07),
    (1.004, -8.456, 1.364, -60.812, 9.974),
    (1.008, -8.381, -0.165, -60.24, -1.204),
    (1.012, -8.291, -2.008, -59.557, -14.675),
    (1.016, -8.341, -3.378, -59.931, -24.769),
    (1.02, -8.405, -3.689, -60.424, -27.092),
    (1.024, -8.337, -3.102, -59.906, -22.725),
    (1.028, -8.15, -1.866, -58.482, -13.609),
    (1.032, -7.846, -0.117, -56.186, -0.847),
    (1.036, -7.533, 1.684, -53.835, 12.205),
    (1.04, -7.379, 3.02, -52.689, 21.917),
    (1.044, -7.283, 3.621, -51.973, 26.3),
    (1.048, -7.075, 3.219, -50.422, 23.308),
    (1.052, -6.751, 2.129, -48.02, 15.338),
    (1.056, -6.313, 0.496, -44.801, 3.554),
    (1.06, -5.87, -1.236, -41.562, -8.834),
    (1.064, -5.485, -2.795, -38.766, -19.972),
    (1.068, -5.099, -3.609, -35.979, -25.777),
    (1.072, -4.77, -3.428, -33.614, -24.421),
    (1.076, -4.335, -2.506, -30.494, -17.767),
    (1.08, -3.893, -1.005, -27.348, -7.094),
    (1.084, -3.51, 0.623, -24.629, 4.387),
    (1.088, -3.022, 2.213, -21.173, 15.593),
    (1.092, -2.529, 3.377, -17.699, 23.812),
    (1.096, -2.095, 3.439, -14.653, 24.229),
    (1.1, -1.558, 2.688, -10.885, 18.877),
    (1.104, -1.017, 1.322, -7.101, 9.257),
    (1.108, -0.537, -0.198, -3.747, -1.388),
    (1.112, -0.058, -2.036, -0.405, -14.256),
    (1.116, 0.361, -3.4, 2.522, -23.886),
    (1.12, 0.885, -3.707, 6.181, -26.079),
    (1.124, 1.413, -3.117, 9.87, -21.91),
    (1.128, 1.88, -1.88, 13.141, -13.189),
    (1.132, 2.45, -0.129, 17.146, -0.906),
    (1.136, 3.023, 1.673, 21.182, 11.773),
    (1.14, 3.534, 3.01, 24.799, 21.284),
    (1.144, 4.043, 3.612, 28.416, 25.642),
    (1.148, 4.492, 3.21, 31.621, 22.817),
    (1.152, 4.94, 2.121, 34.837, 15.077),
    (1.156, 5.33, 0.488, 37.648, 3.469),
    (1.16, 5.721, -1.245, 40.478, -8.883),
    (1.164, 6.054, -2.803, 42.907, -20.111),
    (1.168, 6.494, -3.617, 46.132, -26.093),
    (1.172, 6.94, -3.436, 49.422, -24.864),
    (1.176, 7.223, -2.514, 51.523, -18.194),
    (1.18, 7.445, -1.013, 53.181, -7.328),
    (1.184, 7.672, 0.615, 54.882, 4.46),
    (1.188, 7.847, 2.206, 56.191, 16.051),
    (1.192, 8.027, 3.369, 57.551, 24.625),
    (1.196, 8.155, 3.432, 58.523, 25.12),
    (1.2, 8.291, 2.68, 59.552, 19.611),
    (1.204, 8.375, 1.315, 60.197, 9.606),
    (1.208, 8.469, -0.206, 60.907, -1.505),
    (1.212, 8.422, -2.043, 60.552, -14.95),
    (1.216, 8.255, -3.408, 59.283, -24.966),
    (1.22, 8.076, -3.715, 57.924, -27.191),
    (1.224, 8.051, -3.125, 57.733, -22.831),
    (1.228, 8.054, -1.887, 57.76, -13.752),
    (1.232, 7.938, -0.137, 56.881, -0.992),
    (1.236, 7.703, 1.665, 55.114, 12.089),
    (1.24, 7.458, 3.002, 53.275, 21.803),
    (1.244, 7.266, 3.604, 51.842, 26.171),
    (1.248, 6.964, 3.202, 49.597, 23.165),
    (1.252, 6.652, 2.113, 47.296, 15.209),
    (1.256, 6.396, 0.48, 45.412, 3.442),
    (1.26, 6.032, -1.252, 42.742, -8.957),
    (1.264, 5.659, -2.811, 40.031, -20.108),
    (1.268, 5.344, -3.625, 37.744, -25.929),
    (1.272, 4.921, -3.443, 34.696, -24.552),
    (1.276, 4.492, -2.521, 31.619, -17.891),
    (1.28, 4.121, -1.02, 28.97, -7.21),
    (1.284, 3.644, 0.608, 25.581, 4.283),
    (1.288, 3.163, 2.222, 22.172, 15.661),
    (1.292, 2.741, 3.464, 19.194, 24.449),
    (1.296, 2.214, 3.508, 15.49, 24.721),
    (1.3, 1.684, 2.743, 11.772, 19.272),
    (1.304, 1.215, 1.367, 8.485, 9.575),
    (1.308, 0.642, -0.162, 4.481, -1.13),
    (1.312, 0.067, -2.005, 0.464, -14.042),
    (1.316, -0.447, -3.375, -3.122, -23.707),
    (1.32, -0.958, -3.686, -6.694, -25.927),
    (1.324, -1.41, -3.098, -9.85, -21.774),
    (1.328, -1.965, -1.862, -13.738, -13.07),
    (1.332, -2.523, -0.113, -17.656, -0.795),
    (1.336, -3.019, 1.687, -21.156, 11.875),
    (1.34, -3.514, 3.023, -24.656, 21.379),
    (1.344, -3.949, 3.625, -27.745, 25.722),
    (1.348, -4.384, 3.222, -30.845, 22.892),
    (1.352, -4.76, 2.133, -33.542, 15.147),
    (1.356, -5.242, 0.499, -37.013, 3.551),
    (1.36, -5.729, -1.233, -40.539, -8.801),
    (1.364, -6.157, -2.792, -43.655, -20.045),
    (1.368, -6.584, -3.606, -46.789, -26.03),
    (1.372, -6.953, -3.425, -49.516, -24.785),
    (1.376, -7.323, -2.502, -52.27, -18.13),
    (1.38, -7.533, -1.002, -53.834, -7.255),
    (1.384, -7.683, 0.626, -54.963, 4.539),
    (1.388, -7.945, 2.217, -56.934, 16.146),
    (1.392, -8.217, 3.38, -58.991, 24.753),
    (1.396, -8.33, 3.443, -59.851, 25.246),
    (1.4, -8.294, 2.691, -59.579, 19.691),
    (1.404, -8.242, 1.326, -59.18, 9.672),
    (1.408, -8.319, -0.195, -59.767, -1.424),
    (1.412, -8.411, -2.032, -60.467, -14.868),
    (1.416, -8.364, -3.397, -60.106, -24.914),
    (1.42, -8.196, -3.704, -58.833, -27.144),
    (1.424, -8.016, -3.114, -57.47, -22.743),
    (1.428, -7.888, -1.876, -56.503, -13.651),
    (1.432, -7.752, -0.126, -55.483, -0.912),
    (1.436, -7.668, 1.676, -54.847, 12.163),
    (1.44, -7.47, 3.013, -53.368, 21.885),
    (1.444, -7.157, 3.615, -51.029, 26.224),
    (1.448, -6.834, 3.213, -48.638, 23.218),
    (1.452, -6.567, 2.124, -46.667, 15.276),
    (1.456, -6.296, 0.491, -44.677, 3.517),
    (1.46, -6.079, -1.241, -43.09, -8.883),
    (1.464, -5.753, -2.8, -40.712, -20.043),
    (1.468, -5.314, -3.614, -37.527, -25.846),
    (1.472, -4.868, -3.433, -34.319, -24.467),
    (1.476, -4.482, -2.51, -31.547, -17.813),
    (1.48, -3.99, -1.009, -28.035, -7.129),
    (1.484, -3.493, 0.618, -24.51, 4.356),
    (1.488, -3.057, 2.209, -21.42, 15.565),
    (1.492, -2.62, 3.373, -18.344, 23.789),
    (1.496, -2.242, 3.435, -15.685, 24.208),
    (1.5, -1.758, 2.684, -12.292, 18.855),
    (1.504, -1.166, 1.318, -8.142, 9.23),
    (1.508, -0.571, -0.203, -3.986, -1.417),
    (1.512, -0.038, -2.04, -0.268, -14.286),
    (1.516, 0.491, -3.404, 3.432, -23.918),
    (1.52, 0.961, -3.711, 6.71, -26.111),
    (1.524, 1.533, -3.122, 10.715, -21.944),
    (1.528, 2.108, -1.884, 14.746, -13.225),
    (1.532, 2.622, -0.133, 18.354, -0.935),
    (1.536, 3.133, 1.668, 21.959, 11.748),
    (1.54, 3.584, 3.006, 25.151, 21.259),
    (1.544, 4.034, 3.608, 28.35, 25.611),
    (1.548, 4.426, 3.206, 31.145, 22.779),
    (1.552, 4.923, 2.116, 34.708, 15.046),
    (1.556, 5.424, 0.483, 38.324, 3.441),
    (1.56, 5.865, -1.249, 41.528, -8.922),
    (1.564, 6.306, -2.808, 44.749, -20.18),
    (1.568, 6.584, -3.621, 46.792, -26.143),
    (1.572, 6.802, -3.44, 48.396, -24.865),
    (1.576, 7.129, -2.518, 50.82, -18.209),
    (1.58, 7.464, -1.017, 53.322, -7.36),
    (1.584, 7.744, 0.611, 55.42, 4.432),
    (1.588, 8.027, 2.202, 57.555, 16.049),
    (1.592, 8.152, 3.365, 58.497, 24.625),
    (1.596, 8.219, 3.428, 59.01, 25.106),
    (1.6, 8.296, 2.676, 59.591, 19.581),
    (1.604, 8.328, 1.311, 59.837, 9.571),
    (1.608, 8.371, -0.21, 60.166, -1.534),
    (1.612, 8.287, -2.047, 59.523, -14.959),
    (1.616, 8.188, -3.412, 58.771, -24.979),
    (1.62, 8.23, -3.719, 59.089, -27.265),
    (1.624, 8.288, -3.129, 59.531, -22.917),
    (1.628, 8.215, -1.891, 58.976, -13.805),
    (1.632, 8.022, -0.141, 57.519, -1.024),
    (1.636, 7.714, 1.661, 55.192, 12.059),
    (1.64, 7.396, 2.998, 52.813, 21.76),
    (1.644, 7.134, 3.6, 50.858, 26.109),
    (1.648, 6.867, 3.198, 48.883, 23.115),
    (1.652, 6.655, 2.109, 47.314, 15.179),
    (1.656, 6.333, 0.476, 44.947, 3.411),
    (1.66, 6.002, -1.256, 42.528, -8.985),
    (1.664, 5.727, -2.815, 40.526, -20.147),
    (1.668, 5.344, -3.629, 37.748, -25.959),
    (1.672, 4.849, -3.448, 34.183, -24.572),
    (1.676, 4.35, -2.525, 30.607, -17.907),
    (1.68, 3.911, -1.024, 27.475, -7.232),
    (1.684, 3.472, 0.603, 24.359, 4.25),
    (1.688, 3.092, 2.218, 21.667, 15.627),
    (1.692, 2.605, 3.46, 18.24, 24.408),
    (1.696, 2.115, 3.503, 14.791, 24.685),
    (1.7, 1.684, 2.739, 11.768, 19.242),
    (1.704, 1.148, 1.363, 8.021, 9.545),
    (1.708, 0.61, -0.166, 4.257, -1.159),
    (1.712, 0.132, -2.009, 0.92, -14.072),
    (1.716, -0.449, -3.379, -3.137, -23.737),
    (1.72, -1.033, -3.69, -7.211, -25.959),
    (1.724, -1.554, -3.103, -10.859, -21.809),
    (1.728, -2.073, -1.866, -14.496, -13.103),
    (1.732, -2.531, -0.118, -17.719, -0.825),
    (1.736, -2.989, 1.683, -20.944, 11.844),
    (1.74, -3.388, 3.019, -23.764, 21.338),
    (1.744, -3.892, 3.62, -27.34, 25.685),
    (1.748, -4.4, 3.218, -30.962, 22.864),
    (1.752, -4.848, 2.128, -34.174, 15.125),
    (1.756, -5.296, 0.495, -37.397, 3.522),
    (1.76, -5.685, -1.237, -40.215, -8.829),
    (1.764, -6.074, -2.796, -43.053, -20.063),
    (1.768, -6.407, -3.61, -45.489, -26.024),
    (1.772, -6.742, -3.429, -47.955, -24.771),
    (1.776, -7.021, -2.507, -50.02, -18.111),
    (1.78, -7.408, -1.006, -52.901, -7.277),
    (1.784, -7.802, 0.622, -55.856, 4.514),
    (1.788, -8.035, 2.213, -57.61, 16.13),
    (1.792, -8.103, 3.376, -58.13, 24.693),
    (1.796, -8.128, 3.439, -58.319, 25.162),
    (1.8, -8.269, 2.687, -59.387, 19.655),
    (1.804, -8.423, 1.321, -60.558, 9.659),
    (1.808, -8.426, -0.199, -60.581, -1.456),
    (1.812, -8.303, -2.036, -59.649, -14.882),
    (1.816, -8.167, -3.401, -58.616, -24.894),
    (1.82, -8.179, -3.708, -58.707, -27.171),
    (1.824, -8.212, -3.118, -58.952, -22.819),
    (1.828, -8.119, -1.88, -58.246, -13.713),
    (1.832, -7.907, -0.13, -56.644, -0.944),
    (1.836, -7.683, 1.672, -54.963, 12.134),
    (1.84, -7.513, 3.009, -53.686, 21.863),
    (1.844, -7.232, 3.611, -51.587, 26.211),
    (1.848, -6.941, 3.209, -49.428, 23.208),
    (1.852, -6.705, 2.12, -47.683, 15.263),
    (1.856, -6.36, 0.487, -45.143, 3.489),
    (1.86, -6.006, -1.245, -42.558, -8.908),
    (1.864, -5.709, -2.804, -40.395, -20.067),
    (1.868, -5.305, -3.618, -37.463, -25.874),
    (1.872, -4.893, -3.437, -34.499, -24.501),
    (1.876, -4.54, -2.514, -31.961, -17.849),
    (1.88, -4.08, -1.013, -28.678, -7.161),
    (1.884, -3.615, 0.614, -25.372, 4.329),
    (1.888, -3.209, 2.205, -22.496, 15.544),
    (1.892, -2.698, 3.368, -18.89, 23.765),
    (1.896, -2.183, 3.431, -15.269, 24.174),
    (1.9, -1.728, 2.68, -12.079, 18.824),
    (1.904, -1.17, 1.314, -8.171, 9.2),
    (1.908, -0.609, -0.207, -4.249, -1.447),
    (1.912, -0.109, -2.044, -0.759, -14.315),
    (1.916, 0.389, -3.408, 2.718, -23.946),
    (1.92, 0.827, -3.716, 5.778, -26.137),
    (1.924, 1.37, -3.126, 9.569, -21.968),
    (1.928, 1.915, -1.888, 13.39, -13.249),
    (1.932, 2.4, -0.137, 16.792, -0.964),
    (1.936, 2.883, 1.664, 20.192, 11.708),
    (1.94, 3.306, 3.002, 23.184, 21.204),
    (1.944, 3.834, 3.603, 26.928, 25.556),
    (1.948, 4.366, 3.202, 30.715, 22.742),
    (1.952, 4.836, 2.112, 34.089, 15.008),
    (1.956, 5.306, 0.479, 37.474, 3.409),
    (1.96, 5.717, -1.253, 40.449, -8.943),
    (1.964, 6.128, -2.812, 43.444, -20.183),
    (1.968, 6.481, -3.626, 46.034, -26.151),
    (1.972, 6.836, -3.444, 48.651, -24.903),
    (1.976, 7.135, -2.522, 50.866, -18.24),
    (1.98, 7.436, -1.021, 53.115, -7.389),
    (1.984, 7.683, 0.607, 54.964, 4.399),
    (1.988, 7.935, 2.221, 56.855, 16.175),
    (1.992, 8.132, 3.463, 58.348, 25.343),
    (1.996, 8.335, 3.507, 59.89, 25.721),
    (2.0, 8.382, 2.742, 60.248, 20.085),
)

SYNCHRONIZED_SCAN = (
    (0.0, 0.0, 0.0, 0.0, 0.0),
    (0.004, 0.0, -0.147, 0.0, -1.025),
    (0.008, 0.043, -0.962, 0.301, -6.73),
    (0.012, 0.203, -2.379, 1.419, -16.67),
    (0.016, 0.48, -3.578, 3.355, -25.152),
    (0.02, 0.872, -3.592, 6.089, -25.26),
    (0.024, 1.375, -2.808, 9.606, -19.715),
    (0.028, 1.986, -1.415, 13.89, -9.929),
    (0.032, 2.704, 0.457, 18.934, 3.209),
    (0.036, 3.525, 2.571, 24.733, 18.163),
    (0.04, 4.447, 3.607, 31.295, 25.663),
    (0.044, 5.362, 3.478, 37.877, 24.873),
    (0.048, 6.103, 2.593, 43.263, 18.602),
    (0.052, 6.667, 1.122, 47.406, 8.067),
    (0.056, 7.06, -0.813, 50.309, -5.862),
    (0.06, 7.284, -2.753, 51.979, -19.95),
    (0.064, 7.345, -3.762, 52.435, -27.351),
    (0.068, 7.27, -3.712, 51.87, -26.96),
    (0.072, 7.075, -2.882, 50.421, -20.853),
    (0.076, 6.764, -1.455, 48.116, -10.472),
    (0.08, 6.339, 0.445, 44.991, 3.191),
    (0.084, 5.804, 2.582, 41.082, 18.477),
    (0.088, 5.161, 3.635, 36.423, 25.973),
    (0.092, 4.412, 3.518, 31.051, 25.016),
    (0.096, 3.562, 2.641, 24.993, 18.665),
    (0.1, 2.611, 1.177, 18.277, 8.267),
    (0.104, 1.562, -0.753, 10.917, -5.274),
    (0.108, 0.523, -2.696, 3.652, -18.911),
    (0.112, -0.338, -3.808, -2.363, -26.784),
    (0.116, -1.125, -3.735, -7.858, -26.282),
    (0.12, -1.902, -2.89, -13.301, -20.317),
    (0.124, -2.613, -1.45, -18.294, -10.186),
    (0.128, -3.317, 0.461, -23.26, 3.243),
    (0.132, -3.851, 2.389, -27.049, 16.891),
    (0.136, -4.319, 3.488, -30.38, 24.789),
    (0.14, -4.889, 3.406, -34.469, 24.282),
    (0.144, -5.463, 2.555, -38.605, 18.244),
    (0.148, -5.87, 1.111, -41.561, 7.936),
    (0.152, -6.213, -0.78, -44.069, -5.583),
    (0.156, -6.558, -2.324, -46.604, -16.723),
    (0.16, -6.848, -3.481, -48.739, -25.177),
    (0.164, -7.14, -3.466, -50.908, -25.127),
    (0.168, -7.378, -2.661, -52.681, -19.292),
    (0.172, -7.725, -1.253, -55.28, -9.091),
    (0.176, -8.08, 0.302, -57.957, 2.197),
    (0.18, -8.275, 1.858, -59.43, 13.571),
    (0.184, -8.308, 3.278, -59.682, 24.019),
    (0.188, -8.31, 3.655, -59.696, 26.815),
    (0.192, -8.431, 3.11, -60.618, 22.81),
    (0.196, -8.565, 1.907, -61.646, 13.976),
    (0.2, -8.552, 0.185, -61.546, 1.353),
    (0.204, -8.416, -1.595, -60.504, -11.659),
    (0.208, -8.162, -3.131, -58.572, -22.9),
    (0.212, -7.897, -3.68, -56.572, -26.883),
    (0.216, -7.791, -3.241, -55.773, -23.625),
    (0.22, -7.741, -2.123, -55.399, -15.427),
    (0.224, -7.578, -0.467, -54.171, -3.381),
    (0.228, -7.297, 1.284, -52.075, 9.279),
    (0.232, -7.007, 2.857, -49.917, 20.655),
    (0.236, -6.771, 3.575, -48.173, 25.841),
    (0.24, -6.427, 3.419, -45.634, 24.634),
    (0.244, -6.074, 2.516, -43.05, 18.039),
    (0.248, -5.777, 1.03, -40.887, 7.355),
    (0.252, -5.373, -0.585, -37.956, -4.166),
    (0.256, -4.962, -2.19, -34.992, -15.574),
    (0.26, -4.609, -3.424, -32.456, -24.372),
    (0.264, -4.254, -3.463, -29.918, -24.601),
    (0.268, -3.955, -2.695, -27.79, -19.079),
    (0.272, -3.549, -1.316, -24.904, -9.279),
    (0.276, -3.032, 0.215, -21.245, 1.512),
    (0.28, -2.511, 2.06, -17.573, 14.486),
    (0.284, -2.05, 3.431, -14.336, 24.168),
    (0.288, -1.486, 3.743, -10.381, 26.359),
    (0.292, -0.919, 3.157, -6.417, 22.173),
    (0.296, -0.413, 1.921, -2.886, 13.455),
    (0.3, 0.09, 0.173, 0.628, 1.208),
    (0.304, 0.533, -1.627, 3.725, -11.392),
    (0.308, 1.081, -2.963, 7.549, -20.809),
    (0.312, 1.631, -3.564, 11.401, -25.092),
    (0.316, 2.121, -3.162, 14.832, -22.259),
    (0.32, 2.608, -2.072, 18.261, -14.574),
    (0.324, 3.037, -0.439, 21.279, -3.085),
    (0.328, 3.569, 1.294, 25.047, 9.121),
    (0.332, 4.105, 2.853, 28.857, 20.219),
    (0.336, 4.58, 3.559, 32.252, 25.338),
    (0.34, 5.054, 3.396, 35.656, 24.233),
    (0.344, 5.469, 2.488, 38.652, 17.76),
    (0.348, 5.884, 0.998, 41.665, 7.13),
    (0.352, 6.241, -0.621, 44.274, -4.447),
    (0.356, 6.6, -2.228, 46.909, -16.033),
    (0.36, 6.902, -3.465, 49.142, -25.066),
    (0.364, 7.208, -3.505, 51.409, -25.426),
    (0.368, 7.458, -2.738, 53.277, -19.868),
    (0.372, 7.713, -1.36, 55.186, -9.868),
    (0.376, 7.914, 0.171, 56.698, 1.242),
    (0.38, 8.12, 2.016, 58.258, 14.703),
    (0.384, 8.274, 3.386, 59.424, 24.813),
    (0.388, 8.434, 3.698, 60.645, 27.168),
    (0.392, 8.443, 3.111, 60.712, 22.822),
    (0.396, 8.325, 1.876, 59.815, 13.707),
    (0.4, 8.194, 0.127, 58.817, 0.925),
    (0.404, 8.21, -1.673, 58.938, -12.209),
    (0.408, 8.245, -3.009, 59.207, -22.024),
    (0.412, 8.155, -3.61, 58.52, -26.44),
    (0.416, 7.945, -3.208, 56.935, -23.418),
    (0.42, 7.724, -2.118, 55.271, -15.393),
    (0.424, 7.556, -0.485, 54.01, -3.512),
    (0.428, 7.277, 1.247, 51.927, 9.017),
    (0.432, 6.989, 2.807, 49.783, 20.287),
    (0.436, 6.755, 3.621, 48.052, 26.173),
    (0.44, 6.412, 3.439, 45.526, 24.78),
    (0.444, 6.061, 2.517, 42.954, 18.046),
    (0.448, 5.766, 1.016, 40.803, 7.254),
    (0.452, 5.467, -0.611, 38.64, -4.354),
    (0.456, 5.224, -2.226, 36.88, -15.855),
    (0.46, 4.872, -3.468, 34.342, -24.72),
    (0.464, 4.407, -3.511, 31.012, -24.969),
    (0.468, 3.937, -2.747, 27.662, -19.448),
    (0.472, 3.527, -1.371, 24.745, -9.666),
    (0.476, 3.011, 0.158, 21.099, 1.11),
    (0.48, 2.492, 2.001, 17.439, 14.07),
    (0.484, 2.033, 3.371, 14.214, 23.738),
    (0.488, 1.47, 3.682, 10.272, 25.921),
    (0.492, 0.905, 3.095, 6.319, 21.733),
    (0.496, 0.401, 1.859, 2.799, 13.015),
    (0.5, -0.101, 0.11, -0.704, 0.767),
    (0.504, -0.543, -1.691, -3.79, -11.837),
    (0.508, -1.089, -3.027, -7.605, -21.26),
    (0.512, -1.638, -3.628, -11.446, -25.547),
    (0.516, -2.126, -3.226, -14.868, -22.714),
    (0.52, -2.612, -2.136, -18.287, -15.026),
    (0.524, -3.039, -0.503, -21.296, -3.537),
    (0.528, -3.57, 1.229, -25.055, 8.668),
    (0.532, -4.105, 2.812, -28.856, 19.928),
    (0.536, -4.579, 3.705, -32.242, 26.382),
    (0.54, -5.052, 3.506, -35.638, 25.021),
    (0.544, -5.465, 2.57, -38.625, 18.352),
    (0.548, -5.879, 1.059, -41.629, 7.567),
    (0.552, -6.235, -0.577, -44.23, -4.129),
    (0.556, -6.593, -2.197, -46.857, -15.809),
    (0.56, -6.894, -3.444, -49.082, -24.915),
    (0.564, -7.199, -3.492, -51.341, -25.329),
    (0.568, -7.448, -2.73, -53.201, -19.808),
    (0.572, -7.702, -1.356, -55.102, -9.838),
    (0.576, -7.902, 0.172, -56.607, 1.248),
    (0.58, -8.107, 2.014, -58.159, 14.688),
    (0.584, -8.26, 3.383, -59.318, 24.782),
    (0.588, -8.42, 3.693, -60.532, 27.126),
    (0.592, -8.427, 3.105, -60.593, 22.773),
    (0.596, -8.309, 1.869, -59.692, 13.654),
    (0.6, -8.177, 0.119, -58.689, 0.87),
    (0.604, -8.192, -1.681, -58.805, -12.265),
    (0.608, -8.227, -3.018, -59.072, -22.081),
    (0.612, -8.136, -3.619, -58.382, -26.499),
    (0.616, -7.927, -3.217, -56.795, -23.478),
    (0.62, -7.705, -2.127, -55.13, -15.455),
    (0.624, -7.537, -0.494, -53.867, -3.576),
    (0.628, -7.258, 1.238, -51.782, 8.949),
    (0.632, -6.969, 2.797, -49.636, 20.216),
    (0.636, -6.735, 3.611, -47.904, 26.102),
    (0.64, -6.496, 3.43, -46.144, 24.73),
    (0.644, -6.31, 2.508, -44.782, 18.013),
    (0.648, -6.015, 1.007, -42.618, 7.201),
    (0.652, -5.605, -0.621, -39.637, -4.425),
    (0.656, -5.189, -2.235, -36.626, -15.918),
    (0.66, -4.83, -3.477, -34.046, -24.781),
    (0.664, -4.366, -3.521, -30.719, -25.03),
    (0.668, -3.896, -2.756, -27.371, -19.511),
    (0.672, -3.486, -1.38, -24.457, -9.73),
    (0.676, -2.971, 0.149, -20.814, 1.044),
    (0.68, -2.452, 1.992, -17.157, 14.002),
    (0.684, -1.993, 3.362, -13.934, 23.669),
    (0.688, -1.43, 3.673, -9.994, 25.852),
    (0.692, -0.865, 3.085, -6.043, 21.665),
    (0.696, -0.362, 1.849, -2.525, 12.949),
    (0.7, 0.14, 0.1, 0.977, 0.701),
    (0.704, 0.582, -1.7, 4.062, -11.903),
    (0.708, 1.128, -3.037, 7.876, -21.327),
    (0.712, 1.676, -3.638, 11.717, -25.615),
    (0.716, 2.164, -3.235, 15.138, -22.783),
    (0.72, 2.65, -2.146, 18.556, -15.094),
    (0.724, 3.077, -0.512, 21.565, -3.603),
    (0.728, 3.608, 1.22, 25.324, 8.603),
    (0.732, 4.143, 2.803, 29.125, 19.865),
    (0.736, 4.617, 3.695, 32.512, 26.32),
    (0.74, 5.089, 3.496, 35.907, 24.959),
    (0.744, 5.503, 2.561, 38.895, 18.289),
    (0.748, 5.916, 1.05, 41.9, 7.502),
    (0.752, 6.272, -0.586, 44.501, -4.198),
    (0.756, 6.63, -2.207, 47.129, -15.881),
    (0.76, 6.931, -3.454, 49.354, -24.992),
    (0.764, 7.235, -3.501, 51.614, -25.406),
    (0.768, 7.485, -2.739, 53.474, -19.883),
    (0.772, 7.738, -1.365, 55.375, -9.91),
    (0.776, 7.938, 0.162, 56.88, 1.18),
    (0.78, 8.143, 2.005, 58.433, 14.625),
    (0.784, 8.296, 3.373, 59.592, 24.722),
    (0.788, 8.455, 3.684, 60.806, 27.066),
    (0.792, 8.463, 3.096, 60.866, 22.712),
    (0.796, 8.345, 1.859, 59.964, 13.59),
    (0.8, 8.213, 0.11, 58.96, 0.802),
    (0.804, 8.228, -1.691, 59.076, -12.338),
    (0.808, 8.263, -3.027, 59.342, -22.158),
    (0.812, 8.172, -3.628, 58.651, -26.578),
    (0.816, 7.962, -3.226, 57.063, -23.555),
    (0.82, 7.741, -2.137, 55.396, -15.529),
    (0.824, 7.572, -0.503, 54.132, -3.646),
    (0.828, 7.293, 1.229, 52.046, 8.884),
    (0.832, 7.004, 2.812, 49.899, 20.325),
    (0.836, 6.77, 3.704, 48.165, 26.787),
    (0.84, 6.427, 3.505, 45.635, 25.262),
    (0.844, 6.075, 2.57, 43.061, 18.428),
    (0.848, 5.78, 1.059, 40.907, 7.559),
    (0.852, 5.377, -0.577, 37.985, -4.107),
    (0.856, 4.967, -2.198, 35.03, -15.63),
    (0.86, 4.615, -3.445, 32.502, -24.519),
    (0.864, 4.157, -3.492, 29.226, -24.798),
    (0.868, 3.693, -2.73, 25.928, -19.307),
    (0.872, 3.289, -1.356, 23.061, -9.551),
    (0.876, 2.884, 0.171, 20.2, 1.203),
    (0.88, 2.536, 2.014, 17.752, 14.157),
    (0.884, 2.082, 3.382, 14.562, 23.82),
    (0.888, 1.518, 3.692, 10.611, 25.997),
    (0.892, 0.952, 3.105, 6.649, 21.804),
    (0.896, 0.447, 1.868, 3.121, 13.083),
    (0.9, -0.056, 0.119, -0.39, 0.832),
    (0.904, -0.499, -1.682, -3.483, -11.773),
    (0.908, -1.046, -3.018, -7.304, -21.195),
    (0.912, -1.596, -3.62, -11.153, -25.482),
    (0.916, -2.085, -3.217, -14.581, -22.65),
    (0.92, -2.572, -2.128, -18.005, -14.964),
    (0.924, -3.0, -0.494, -21.021, -3.476),
    (0.928, -3.532, 1.238, -24.784, 8.726),
    (0.932, -4.068, 2.797, -28.59, 19.818),
    (0.936, -4.543, 3.611, -31.982, 25.703),
    (0.94, -5.016, 3.43, -35.381, 24.467),
    (0.944, -5.431, 2.507, -38.373, 17.895),
    (0.948, -5.845, 1.006, -41.382, 7.188),
    (0.952, -6.202, -0.621, -43.987, -4.448),
    (0.956, -6.56, -2.235, -46.618, -16.08),
    (0.96, -6.863, -3.477, -48.848, -25.151),
    (0.964, -7.168, -3.521, -51.111, -25.538),
    (0.968, -7.418, -2.757, -52.975, -20.0),
    (0.972, -7.672, -1.381, -54.88, -10.018),
    (0.976, -7.873, 0.148, -56.389, 1.075),
    (0.98, -8.079, 1.992, -57.946, 14.52),
    (0.984, -8.232, 3.361, -59.109, 24.616),
    (0.988, -8.393, 3.672, -60.327, 26.963),
    (0.992, -8.401, 3.085, -60.392, 22.616),
    (0.996, -8.283, 1.849, -59.495, 13.504),
    (1.0, -8.152, 0.1, -58.496, 0.727),
    (1.004, -8.167, -1.701, -58.615, -12.404),
    (1.008, -8.203, -3.037, -58.884, -22.218),
    (1.012, -8.112, -3.638, -58.196, -26.634),
    (1.016, -7.902, -3.236, -56.612, -23.613),
    (1.02, -7.681, -2.146, -54.949, -15.59),
    (1.024, -7.513, -0.513, -53.688, -3.713),
    (1.028, -7.339, 1.219, -52.385, 8.819),
    (1.032, -7.216, 2.802, -51.471, 20.294),
    (1.036, -6.982, 3.695, -49.729, 26.766),
    (1.04, -6.632, 3.496, -47.143, 25.235),
    (1.044, -6.274, 2.56, -44.514, 18.388),
    (1.048, -5.972, 1.049, -42.31, 7.502),
    (1.052, -5.563, -0.586, -39.336, -4.179),
    (1.056, -5.148, -2.207, -36.332, -15.715),
    (1.06, -4.79, -3.454, -33.757, -24.611),
    (1.064, -4.326, -3.502, -30.436, -24.887),
    (1.068, -3.857, -2.74, -27.094, -19.388),
    (1.072, -3.448, -1.365, -24.185, -9.624),
    (1.076, -2.933, 0.162, -20.547, 1.137),
    (1.08, -2.414, 2.004, -16.895, 14.085),
    (1.084, -1.956, 3.373, -13.677, 23.746),
    (1.088, -1.499, 3.683, -10.472, 25.929),
    (1.092, -1.1, 3.095, -7.684, 21.742),
    (1.096, -0.596, 1.859, -4.164, 13.018),
    (1.1, 0.016, 0.11, 0.111, 0.766),
    (1.104, 0.63, -1.691, 4.396, -11.84),
    (1.108, 1.181, -3.028, 8.248, -21.266),
    (1.112, 1.729, -3.629, 12.083, -25.556),
    (1.116, 2.216, -3.227, 15.499, -22.724),
    (1.12, 2.701, -2.137, 18.912, -15.036),
    (1.124, 3.127, -0.504, 21.916, -3.544),
    (1.128, 3.657, 1.228, 25.67, 8.665),
    (1.132, 4.191, 2.811, 29.466, 19.93),
    (1.136, 4.664, 3.704, 32.849, 26.388),
    (1.14, 5.135, 3.505, 36.241, 25.027),
    (1.144, 5.548, 2.569, 39.225, 18.355),
    (1.148, 5.961, 1.058, 42.227, 7.565),
    (1.152, 6.316, -0.578, 44.824, -4.139),
    (1.156, 6.673, -2.198, 47.448, -15.826),
    (1.16, 6.974, -3.445, 49.67, -24.94),
    (1.164, 7.277, -3.493, 51.926, -25.354),
    (1.168, 7.526, -2.731, 53.783, -19.83),
    (1.172, 7.779, -1.357, 55.681, -9.853),
    (1.176, 7.978, 0.171, 57.182, 1.241),
    (1.18, 8.183, 2.013, 58.731, 14.692),
    (1.184, 8.231, 3.382, 59.099, 24.768),
    (1.188, 8.243, 3.692, 59.193, 27.068),
    (1.192, 8.373, 3.104, 60.18, 22.752),
    (1.196, 8.517, 1.868, 61.273, 13.677),
    (1.2, 8.511, 0.118, 61.228, 0.866),
    (1.204, 8.38, -1.682, 60.235, -12.296),
    (1.208, 8.237, -3.019, 59.143, -22.09),
    (1.212, 8.144, -3.62, 58.441, -26.509),
    (1.216, 7.939, -3.218, 56.889, -23.488),
    (1.22, 7.722, -2.128, 55.256, -15.465),
    (1.224, 7.558, -0.495, 54.026, -3.584),
    (1.228, 7.283, 1.237, 51.972, 8.944),
    (1.232, 6.999, 2.797, 49.856, 20.214),
    (1.236, 6.769, 3.61, 48.153, 26.102),
    (1.24, 6.429, 3.429, 45.653, 24.709),
    (1.244, 6.082, 2.507, 43.107, 17.975),
    (1.248, 5.79, 1.006, 40.981, 7.182),
    (1.252, 5.391, -0.622, 38.084, -4.426),
    (1.256, 4.985, -2.236, 35.155, -15.905),
    (1.26, 4.636, -3.478, 32.651, -24.76),
    (1.264, 4.181, -3.522, 29.4, -25.013),
    (1.268, 3.721, -2.757, 26.125, -19.502),
    (1.272, 3.32, -1.381, 23.28, -9.73),
    (1.276, 2.813, 0.148, 19.704, 1.037),
    (1.28, 2.303, 1.991, 16.112, 13.989),
    (1.284, 1.853, 3.361, 12.951, 23.654),
    (1.288, 1.403, 3.672, 9.802, 25.844),
    (1.292, 1.012, 3.084, 7.067, 21.662),
    (1.296, 0.516, 1.848, 3.6, 12.943),
    (1.3, 0.015, 0.099, 0.104, 0.694),
    (1.304, -0.426, -1.701, -2.974, -11.909),
    (1.308, -0.971, -3.038, -6.779, -21.33),
    (1.312, -1.519, -3.639, -10.612, -25.615),
    (1.316, -2.006, -3.236, -14.025, -22.78),
    (1.32, -2.595, -2.147, -18.169, -15.099),
    (1.324, -3.187, -0.513, -22.343, -3.612),
    (1.328, -3.717, 1.219, -26.096, 8.6),
    (1.332, -4.244, 2.802, -29.848, 19.868),
    (1.336, -4.711, 3.694, -33.186, 26.327),
    (1.34, -5.176, 3.495, -36.534, 24.965),
    (1.344, -5.583, 2.56, -39.475, 18.292),
    (1.348, -5.989, 1.049, -42.434, 7.499),
    (1.352, -6.339, -0.587, -44.989, -4.207),
    (1.356, -6.69, -2.208, -47.572, -15.896),
    (1.36, -6.985, -3.455, -49.754, -25.011),
    (1.364, -7.283, -3.502, -51.969, -25.424),
    (1.368, -7.526, -2.74, -53.787, -19.898),
    (1.372, -7.774, -1.366, -55.646, -9.92),
    (1.376, -7.968, 0.161, -57.109, 1.173),
    (1.38, -8.168, 2.004, -58.62, 14.621),
    (1.384, -8.212, 3.372, -58.953, 24.693),
    (1.388, -8.221, 3.683, -59.024, 26.993),
    (1.392, -8.349, 3.095, -59.991, 22.677),
    (1.396, -8.489, 1.858, -61.064, 13.604),
    (1.4, -8.481, 0.109, -61.003, 0.797),
    (1.404, -8.349, -1.692, -59.997, -12.361),
    (1.408, -8.204, -3.028, -58.892, -22.152),
    (1.412, -8.109, -3.629, -58.177, -26.569),
    (1.416, -7.903, -3.227, -56.613, -23.549),
    (1.42, -7.684, -2.138, -54.97, -15.527),
    (1.424, -7.518, -0.504, -53.728, -3.651),
    (1.428, -7.242, 1.228, -51.664, 8.873),
    (1.432, -6.956, 2.811, -49.538, 20.309),
    (1.436, -6.724, 3.703, -47.825, 26.769),
    (1.44, -6.488, 3.504, -46.084, 25.267),
    (1.444, -6.305, 2.569, -44.74, 18.454),
    (1.448, -6.011, 1.058, -42.593, 7.564),
    (1.452, -5.604, -0.578, -39.629, -4.121),
    (1.456, -5.19, -2.199, -36.635, -15.659),
    (1.46, -4.834, -3.446, -34.07, -24.557),
    (1.464, -4.372, -3.493, -30.758, -24.833),
    (1.468, -3.904, -2.731, -27.426, -19.333),
    (1.472, -3.496, -1.357, -24.526, -9.567),
    (1.476, -2.982, 0.17, -20.896, 1.197),
    (1.48, -2.465, 2.013, -17.253, 14.147),
    (1.484, -2.008, 3.381, -14.043, 23.809),
    (1.488, -1.448, 3.691, -10.116, 25.987),
    (1.492, -0.884, 3.104, -6.177, 21.796),
    (1.496, -0.383, 1.867, -2.671, 13.075),
    (1.5, 0.117, 0.118, 0.819, 0.825),
    (1.504, 0.557, -1.683, 3.892, -11.78),
    (1.508, 1.102, -3.019, 7.694, -21.204),
    (1.512, 1.649, -3.621, 11.524, -25.492),
    (1.516, 2.135, -3.218, 14.934, -22.659),
    (1.52, 2.62, -2.129, 18.341, -14.973),
    (1.524, 3.045, -0.495, 21.339, -3.484),
    (1.528, 3.575, 1.237, 25.086, 8.721),
    (1.532, 4.108, 2.796, 28.876, 19.814),
    (1.536, 4.58, 3.61, 32.252, 25.701),
    (1.54, 5.052, 3.429, 35.636, 24.466),
    (1.544, 5.464, 2.506, 38.613, 17.892),
    (1.548, 5.876, 1.005, 41.608, 7.183),
    (1.552, 6.231, -0.622, 44.198, -4.456),
    (1.556, 6.587, -2.236, 46.815, -16.091),
    (1.56, 6.887, -3.478, 49.03, -25.163),
    (1.564, 7.19, -3.522, 51.279, -25.551),
    (1.568, 7.438, -2.758, 53.13, -20.012),
    (1.572, 7.691, -1.382, 55.021, -10.027),
    (1.576, 7.89, 0.147, 56.517, 1.068),
    (1.58, 8.094, 1.991, 58.06, 14.515),
    (1.584, 8.246, 3.36, 59.21, 24.612),
    (1.588, 8.404, 3.671, 60.416, 26.959),
    (1.592, 8.411, 3.084, 60.469, 22.611),
    (1.596, 8.292, 1.848, 59.562, 13.498),
    (1.6, 8.159, 0.099, 58.554, 0.72),
    (1.604, 8.174, -1.702, 58.665, -12.412),
    (1.608, 8.208, -3.038, 58.927, -22.226),
    (1.612, 8.117, -3.639, 58.234, -26.643),
    (1.616, 7.907, -3.237, 56.646, -23.621),
    (1.62, 7.685, -2.147, 54.978, -15.598),
    (1.624, 7.516, -0.514, 53.712, -3.72),
    (1.628, 7.341, 1.218, 52.405, 8.812),
    (1.632, 7.218, 2.801, 51.486, 20.287),
    (1.636, 6.983, 3.694, 49.74, 26.759),
    (1.64, 6.633, 3.495, 47.15, 25.228),
    (1.644, 6.274, 2.559, 44.517, 18.381),
    (1.648, 5.972, 1.048, 42.309, 7.495),
    (1.652, 5.563, -0.587, 39.331, -4.186),
    (1.656, 5.147, -2.208, 36.323, -15.722),
    (1.66, 4.789, -3.455, 33.745, -24.618),
    (1.664, 4.324, -3.503, 30.42, -24.894),
    (1.668, 3.855, -2.741, 27.075, -19.395),
    (1.672, 3.444, -1.366, 24.163, -9.631),
    (1.676, 2.929, 0.161, 20.522, 1.13),
    (1.68, 2.41, 2.003, 16.867, 14.078),
    (1.684, 1.952, 3.372, 13.646, 23.739),
    (1.688, 1.494, 3.682, 10.439, 25.922),
    (1.692, 1.095, 3.094, 7.647, 21.735),
    (1.696, 0.591, 1.858, 4.125, 13.011),
    (1.7, 0.083, 0.109, 0.577, 0.759),
    (1.704, -0.366, -1.692, -2.552, -11.845),
    (1.708, -0.918, -3.029, -6.408, -21.266),
    (1.712, -1.472, -3.63, -10.289, -25.55),
    (1.716, -1.966, -3.228, -13.749, -22.717),
    (1.72, -2.563, -2.138, -17.939, -15.036),
    (1.724, -3.161, -0.505, -22.158, -3.551),
    (1.728, -3.697, 1.227, -25.955, 8.66),
    (1.732, -4.23, 2.81, -29.75, 19.927),
    (1.736, -4.703, 3.703, -33.131, 26.387),
    (1.74, -5.174, 3.504, -36.521, 25.026),
    (1.744, -5.586, 2.568, -39.503, 18.353),
    (1.748, -5.999, 1.057, -42.503, 7.56),
    (1.752, -6.354, -0.579, -45.099, -4.147),
    (1.756, -6.71, -2.199, -47.722, -15.838),
    (1.76, -7.01, -3.446, -49.942, -24.955),
    (1.764, -7.314, -3.494, -52.197, -25.369),
    (1.768, -7.562, -2.732, -54.052, -19.844),
    (1.772, -7.814, -1.358, -55.949, -9.863),
    (1.776, -8.013, 0.17, -57.448, 1.235),
    (1.78, -8.217, 2.012, -58.996, 14.69),
    (1.784, -8.266, 3.381, -59.361, 24.769),
    (1.788, -8.278, 3.691, -59.454, 27.071),
    (1.792, -8.407, 3.103, -60.441, 22.753),
    (1.796, -8.551, 1.867, -61.533, 13.674),
    (1.8, -8.544, 0.117, -61.486, 0.859),
    (1.804, -8.414, -1.683, -60.492, -12.308),
    (1.808, -8.166, -3.02, -58.605, -22.082),
    (1.812, -7.907, -3.621, -56.649, -26.453),
    (1.816, -7.807, -3.219, -55.893, -23.465),
    (1.82, -7.763, -2.129, -55.56, -15.478),
    (1.824, -7.605, -0.496, -54.373, -3.593),
    (1.828, -7.329, 1.236, -52.314, 8.94),
    (1.832, -7.044, 2.796, -50.193, 20.215),
    (1.836, -6.814, 3.609, -48.485, 26.104),
    (1.84, -6.474, 3.428, -45.981, 24.711),
    (1.844, -6.126, 2.506, -43.43, 17.973),
    (1.848, -5.834, 1.005, -41.3, 7.177),
    (1.852, -5.434, -0.623, -38.399, -4.434),
    (1.856, -5.028, -2.237, -35.465, -15.916),
    (1.86, -4.679, -3.479, -32.958, -24.773),
    (1.864, -4.224, -3.523, -29.702, -25.026),
    (1.868, -3.763, -2.758, -26.423, -19.513),
    (1.872, -3.361, -1.382, -23.575, -9.739),
    (1.876, -2.855, 0.147, -19.996, 1.03),
    (1.88, -2.344, 1.99, -16.401, 13.983),
    (1.884, -1.893, 3.36, -13.237, 23.649),
    (1.888, -1.443, 3.671, -10.085, 25.838),
    (1.892, -1.052, 3.083, -7.348, 21.656),
    (1.896, -0.555, 1.847, -3.878, 12.936),
    (1.9, -0.055, 0.098, -0.38, 0.687),
    (1.904, 0.387, -1.702, 2.699, -11.916),
    (1.908, 0.932, -3.039, 6.507, -21.336),
    (1.912, 1.48, -3.64, 10.341, -25.62),
    (1.916, 1.967, -3.237, 13.754, -22.785),
    (1.92, 2.557, -2.148, 17.9, -15.104),
    (1.924, 3.149, -0.514, 22.074, -3.618),
    (1.928, 3.679, 1.218, 25.828, 8.592),
    (1.932, 4.206, 2.801, 29.579, 19.857),
    (1.936, 4.673, 3.693, 32.918, 26.314),
    (1.94, 5.139, 3.494, 36.266, 24.952),
    (1.944, 5.546, 2.559, 39.207, 18.28),
    (1.948, 5.953, 1.048, 42.166, 7.49),
    (1.952, 6.302, -0.588, 44.722, -4.213),
    (1.956, 6.654, -2.209, 47.304, -15.899),
    (1.96, 6.949, -3.456, 49.486, -25.01),
    (1.964, 7.247, -3.503, 51.702, -25.423),
    (1.968, 7.491, -2.741, 53.519, -19.899),
    (1.972, 7.738, -1.367, 55.378, -9.924),
    (1.976, 7.933, 0.16, 56.842, 1.165),
    (1.98, 8.133, 2.003, 58.353, 14.609),
    (1.984, 8.28, 3.371, 59.473, 24.704),
    (1.988, 8.435, 3.682, 60.647, 27.045),
    (1.992, 8.438, 3.094, 60.673, 22.691),
    (1.996, 8.316, 1.857, 59.743, 13.572),
    (2.0, 8.18, 0.108, 58.712, 0.788),
)
# fmt: on
