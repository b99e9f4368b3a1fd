import sys

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

# Only install pytest and runner when test command is run
# This makes work easier for offline installs or low bandwidth machines
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

version = {}
with open('dworkpf/_version.py') as f:
    exec(f.read(), version)

setup(
    name='dworkpf',
    version=version['__version__'],
    packages=['dworkpf', 'dworkpf.algebra', 'dworkpf.models', 'dworkpf.family'],
    license='MIT',
    description='Exact Gauss-Manin connection blocks and hypergeometric parameters for the Dwork family.',
    python_requires='>=3.8',
    test_suite='test',
    setup_requires=pytest_runner,
    install_requires=[
        'sympy>=1.9'
    ],
    tests_require=[
        'pytest'
    ],
    entry_points={
        'console_scripts': ['dworkpf = dworkpf.cli:main'],
    }
)
