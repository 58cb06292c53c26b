from setuptools import setup, find_packages

def getreadme():
    """Fetches readme content"""
    with open('README.rst', encoding='UTF-8') as readme_file:
        return readme_file.read()

def getversion():
    """Fetches version information from VERSION file"""
    with open('transmonfield/VERSION', encoding='UTF-8') as version_file:
        return version_file.read().strip()

setup(
    name = 'transmonfield',
    version = getversion(),
    description = ' '.join([
        'Spectrum, coherence and fitting tools for two-junction transmon qubits',
        'in in-plane magnetic fields.']),
    long_description = getreadme(),
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Physics'
    ],
    keywords = [
        'transmon',
        'josephson junction',
        'superconducting qubit',
        'magnetic field',
        'coherence',
        'fraunhofer'
    ],
    packages = find_packages(exclude=['tests', 'tests.*']),
    install_requires = [
        'DataModelDict',
        'numpy',
        'scipy',
        'matplotlib',
        'pandas',
        'click',
        'yabadaba'
    ],
    extras_require = {
        'test': ['pytest', 'hypothesis']
    },
    entry_points = {
        'console_scripts': ['transmonfield=transmonfield.cli:main']
    },
    package_data = {'transmonfield': ['VERSION']},
    include_package_data = True,
    zip_safe = False
)
