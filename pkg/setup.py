from setuptools import setup, find_packages

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name='fedledger',
    version='0.1.0',
    license='MIT',
    description='Blockchain-based private federated learning: miner association, DP-SGD and proof-of-work ledger',
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=['Federated learning', 'Differential privacy', 'Blockchain', 'Matching', 'Simulation'],
    packages=find_packages(exclude=['unittests', 'unittests.*']),
    classifiers=[
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8'
    ],
    install_requires=[
        'numpy>=1.17',
        'plotly>=4.0',
        'pyyaml>=5.1'
    ],
    python_requires='>=3.7',
    entry_points={
        'console_scripts': [
            'fedledger = fedledger.main:main'
        ]
    },
)
