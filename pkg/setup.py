from setuptools import setup, find_packages

long_description = """
kac_typicality checks, with exact arithmetic, the typicality criterion for
Kac modules of the general linear Lie superalgebra gl(m,n).

It has the following **main components**:

* the root datum of gl(m,n): weights with exact rational coordinates, the
supertrace form, rho and the typicality polynomial;
* a super-PBW straightening engine that rewrites words in the matrix units
into normal form and compares the Harish-Chandra part of the top element with
the typicality polynomial as an identity of integer polynomials;
* modular representations over finite fields: baby Verma and Kac modules with
a p-character, singular vectors, spinning of submodules, a simplicity oracle
and scans over all restricted weights;
* a command line tool, `kac-verify`, writing deterministic JSON, CSV or text
reports and per-case JSON logs.
"""

setup(
    name='kac_typicality',
    version='0.1.0',
    description=
    "Exact verification of the typicality criterion for gl(m,n) Kac modules.",
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords=[
        'lie superalgebras',
        'kac modules',
        'modular representations',
        'finite fields',
        'computer algebra',
    ],
    license='MIT',
    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8'
    ],
    packages=find_packages(include=["kac_typicality*"]),
    python_requires=">=3.7",
    install_requires=['numpy', 'galois', 'sympy'],
    extras_require={"test": ["pytest"]},
    entry_points={
        'console_scripts': ['kac-verify = kac_typicality.main:main']
    })
