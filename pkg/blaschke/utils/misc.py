import numpy as np


def complex2pair(z):
    "Transforms complex z into the json pair [z.real, z.imag]"
    z = complex(z)
    return [z.real, z.imag]


def pair2complex(pair):
    "Transforms the json pair [re, im] into complex re + 1j * im"
    if len(pair) != 2:
        raise ValueError(f"expected a [re, im] pair got {pair}")
    re, im = pair
    return complex(float(re), float(im))


def complex2array(z):
    "Transforms complex z into real array Z where Z[0] = z.real Z[1] = z.imag"
    z = np.asarray(z, dtype=complex)
    Z_shape = (2,) + z.shape
    Z = np.zeros(Z_shape)
    Z[0] = z.real
    Z[1] = z.imag
    return Z


def array2complex(Z):
    "Transforms real array Z into complex z where z.real = Z[0] z.imag = Z[1]"
    Z = np.asarray(Z, dtype=float)
    if Z.shape[0] != 2:
        raise ValueError("First axis of Z must be of length 2")
    z = Z[0] + 1j * Z[1]
    return z


def parse_complex(text):
    "Parses '0.3+0.1j', '0.3,0.1' or '0.3' into a complex number"
    text = text.strip().replace(" ", "")
    if "," in text:
        return pair2complex(text.split(","))
    return complex(text.replace("i", "j"))


def circle_points(count, radius=1., offset=0.):
    "count equispaced points on the circle |z| = radius"
    t = offset + 2 * np.pi * np.arange(count) / count
    return radius * np.exp(1j * t)


def disk_grid(n_radii=10, n_angles=20, r_max=0.95):
    "Polar grid of n_radii * n_angles interior points"
    radii = r_max * np.arange(1, n_radii + 1) / n_radii
    points = [
        circle_points(n_angles, radius, offset=0.5 * k)
        for k, radius in enumerate(radii)
    ]
    return np.concatenate(points)


def random_disk_points(rng, size, radius=1.):
    "Points uniform (w.r.t. area) in the disk |z| < radius"
    r = radius * np.sqrt(rng.uniform(size=size))
    t = rng.uniform(0, 2 * np.pi, size=size)
    return r * np.exp(1j * t)


def random_unimodular(rng):
    return np.exp(1j * rng.uniform(0, 2 * np.pi))
