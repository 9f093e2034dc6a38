from setuptools import find_packages, setup

# load README.md as long description for PyPI
with open('README.md', 'r') as f:
    long_description = f.read()

# run setup
setup(name='iptransform',
      version='0.1.0',
      description='Integer point transforms of finite point sets and rational polytopes, with lattice, finite Fourier and Brion tooling.',
      package_dir={'iptransform': 'iptransform'},
      packages=find_packages(),
      long_description=long_description,
      long_description_content_type='text/markdown',
      license='Apache 2.0',
      classifiers=[
          'License :: OSI Approved :: Apache Software License',
          'Programming Language :: Python :: 3',
          'Operating System :: OS Independent',
          'Intended Audience :: Developers',
          'Intended Audience :: Science/Research',
          'Natural Language :: English',
          'Topic :: Scientific/Engineering :: Mathematics',
          'Topic :: Utilities'
      ],
      keywords='integer point transform, lattice points, polytope, hermite normal form, fourier transform, brion',
      install_requires=['mpmath>=1.3',
                        'numpy>=1.26',
                        'pandas>=2.0',
                        'sympy>=1.12',
                        'tqdm>=4.66',
                        ],
      extras_require={
          'dev': ['black>=24.0',
                  'flake8>=7.0',
                  'pytest-cov>=4.1',
                  'twine>=5.1',
                  'pytest>=8.0',
                  'shapely>=2.0']
                  },
      entry_points={'console_scripts': ['iptransform=iptransform.src.cli:main']},
      python_requires='>=3.10'
      )
