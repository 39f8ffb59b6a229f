from setuptools import setup, find_packages

setup(name='kronroot',
      version='0.1.0',
      description='Kronecker products, rearrangement operators and Kronecker roots of matrices',
      author='The kronroot developers',
      classifiers=['Development Status :: 3 - Alpha',
                  'Intended Audience :: Science/Research',
                  'License :: OSI Approved :: Apache Software License',
                  'Operating System :: POSIX',
                  'Operating System :: Microsoft :: Windows',
                  'Operating System :: MacOS :: MacOS X',
                  'Topic :: Scientific/Engineering :: Mathematics',
                  'Programming Language :: Python :: 3'],
        packages = find_packages(exclude=['tests']),
        python_requires='>=3.8',
        install_requires=['numpy>=1.17', 'sympy>=1.5', 'six'],
        entry_points={'console_scripts': ['kronroot = kronroot.cli:main']},
        )
